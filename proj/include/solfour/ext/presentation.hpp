#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solfour/exact/int_matrix.hpp"

namespace solfour::ext {

/// gen^exp; words are products of syllables.
struct Syllable {
  std::size_t gen = 0;
  long exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

/// Finite presentation: named generators and relator words.
class FpPresentation {
 public:
  FpPresentation() = default;
  explicit FpPresentation(std::vector<std::string> generators);

  [[nodiscard]] const std::vector<std::string>& generators() const noexcept { return generators_; }
  [[nodiscard]] const std::vector<Word>& relators() const noexcept { return relators_; }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;

  void add_relator(Word w);
  /// Adds "lhs = rhs" as the relator lhs * rhs^-1; a bare word is a relator.
  void add_relation(std::string_view text);

  /// Parses "u v^-1 x^3" (tokens separated by blanks, '*' or '.'); "1" and
  /// the empty string are the identity.
  [[nodiscard]] Word parse_word(std::string_view text) const;
  [[nodiscard]] std::string format(const Word& w) const;

  [[nodiscard]] IntVector exponent_sums(const Word& w) const;
  /// Rows are relators, columns generators, entries exponent sums.
  [[nodiscard]] IntMatrix relator_matrix() const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

Word inverse(const Word& w);
Word concat(Word a, const Word& b);

}  // namespace solfour::ext
