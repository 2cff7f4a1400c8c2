#include "solfour/ext/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace solfour::ext {

FpPresentation::FpPresentation(std::vector<std::string> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw ParseError("empty generator name");
    if (!seen.insert(g).second) throw ParseError("duplicate generator name '" + g + "'");
  }
}

std::optional<std::size_t> FpPresentation::find(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

void FpPresentation::add_relator(Word w) {
  for (const auto& s : w)
    if (s.gen >= generators_.size()) throw ParseError("relator references an undeclared generator");
  relators_.push_back(std::move(w));
}

void FpPresentation::add_relation(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    add_relator(parse_word(text));
    return;
  }
  add_relator(concat(parse_word(text.substr(0, eq)), inverse(parse_word(text.substr(eq + 1)))));
}

Word FpPresentation::parse_word(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]) && text[j] != '^') ++j;
    const std::string_view name = text.substr(i, j - i);
    long exp = 1;
    if (j < text.size() && text[j] == '^') {
      std::size_t k = j + 1;
      if (k < text.size() && (text[k] == '(' )) ++k;
      std::size_t start = k;
      if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      std::string_view digits = text.substr(start, k - start);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw ParseError("malformed exponent in word '" + std::string(text) + "'");
      if (k < text.size() && text[k] == ')') ++k;
      j = k;
    }
    if (name == "1") {
      i = j;
      continue;
    }
    const auto gen = find(name);
    if (!gen) throw ParseError("unknown generator '" + std::string(name) + "'");
    if (exp != 0) out.push_back({*gen, exp});
    i = j;
  }
  return out;
}

std::string FpPresentation::format(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << generators_.at(w[i].gen);
    if (w[i].exp != 1) os << '^' << w[i].exp;
  }
  return os.str();
}

IntVector FpPresentation::exponent_sums(const Word& w) const {
  IntVector v(generators_.size());
  for (const auto& s : w) v[s.gen] += s.exp;
  return v;
}

IntMatrix FpPresentation::relator_matrix() const {
  IntMatrix m(relators_.size(), generators_.size());
  for (std::size_t i = 0; i < relators_.size(); ++i)
    for (const auto& s : relators_[i]) m(i, s.gen) += s.exp;
  return m;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace solfour::ext
