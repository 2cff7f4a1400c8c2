#include "solfour/ext/extension_group.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace solfour::ext {

std::string_view to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::Trivial: return "Trivial";
    case QuotientKind::C2: return "C2";
    case QuotientKind::Zq: return "Zq";
    case QuotientKind::ZxC2: return "ZxC2";
    case QuotientKind::Dinf: return "Dinf";
    case QuotientKind::Klein: return "Klein";
  }
  return "?";
}

QuotientKind parse_quotient_kind(std::string_view s) {
  for (auto k : {QuotientKind::Trivial, QuotientKind::C2, QuotientKind::Zq, QuotientKind::ZxC2, QuotientKind::Dinf,
                 QuotientKind::Klein})
    if (s == to_string(k)) return k;
  throw ParseError("unknown quotient kind '" + std::string(s) + "'");
}

namespace {

std::vector<std::string> default_quotient_names(QuotientKind k) {
  switch (k) {
    case QuotientKind::Trivial: return {};
    case QuotientKind::C2: return {"g"};
    case QuotientKind::Zq: return {"t"};
    case QuotientKind::ZxC2: return {"t", "g"};
    case QuotientKind::Dinf: return {"u", "v"};
    case QuotientKind::Klein: return {"x", "y"};
  }
  return {};
}

std::vector<std::string> default_lattice_names(std::size_t n, const std::vector<std::string>& taken) {
  static const char* xyz[] = {"x", "y", "z"};
  bool clash = n > 3;
  for (std::size_t i = 0; i < n && !clash; ++i)
    clash = std::find(taken.begin(), taken.end(), xyz[i]) != taken.end();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(clash ? "e" + std::to_string(i + 1) : xyz[i]);
  return out;
}

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument("extension data: " + what); }

std::int64_t floor_div2(std::int64_t e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }

}  // namespace

ExtensionGroup::ExtensionGroup(ExtensionData data) : data_(std::move(data)) {
  const std::size_t n = data_.rank;
  if (data_.quotient_names.empty()) data_.quotient_names = default_quotient_names(data_.kind);
  if (data_.quotient_names.size() != default_quotient_names(data_.kind).size())
    invalid("wrong number of quotient generators for kind " + std::string(to_string(data_.kind)));
  if (data_.lattice_names.empty()) data_.lattice_names = default_lattice_names(n, data_.quotient_names);
  if (data_.lattice_names.size() != n) invalid("lattice name count differs from rank");
  {
    std::set<std::string> seen;
    for (const auto& s : generator_names())
      if (s.empty() || !seen.insert(s).second) invalid("generator names must be distinct and nonempty");
  }

  const auto& qn = data_.quotient_names;
  auto is_quotient_name = [&](const std::string& s) { return std::find(qn.begin(), qn.end(), s) != qn.end(); };
  for (const auto& [g, m] : data_.action)
    if (!is_quotient_name(g)) invalid("action given for unknown generator '" + g + "'");
  for (const auto& [g, s] : data_.cocycles)
    if (!is_quotient_name(g)) invalid("cocycle given for unknown generator '" + g + "'");
  for (const auto& [g, s] : data_.axis_signs) {
    if (!is_quotient_name(g)) invalid("axis sign given for unknown generator '" + g + "'");
    if (s != 1 && s != -1) invalid("axis signs must be +1 or -1");
  }
  if (!data_.axis_signs.empty())
    for (const auto& g : qn) data_.axis_signs.try_emplace(g, 1);

  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t j = 0; j < qn.size(); ++j) {
    auto it = data_.action.find(qn[j]);
    IntMatrix m = it == data_.action.end() ? id : it->second;
    if (m.rows() != n || m.cols() != n) invalid("action of '" + qn[j] + "' has wrong size");
    if (abs(determinant(m)) != 1) invalid("action of '" + qn[j] + "' is not in GL(n,Z)");
    actions_.push_back(std::move(m));

    auto ct = data_.cocycles.find(qn[j]);
    IntVector s = ct == data_.cocycles.end() ? IntVector(n) : ct->second;
    if (s.size() != n) invalid("cocycle of '" + qn[j] + "' has wrong dimension");
    if (!is_order_two(j) && !s.is_zero()) invalid("square cocycle given for infinite-order generator '" + qn[j] + "'");
    if (is_order_two(j)) {
      if (!(actions_[j] * actions_[j]).is_identity()) invalid("action of order-two generator '" + qn[j] + "' does not square to I");
      if (!(actions_[j] * s == s)) invalid("cocycle of '" + qn[j] + "' is not fixed by its action");
    }
    squares_.push_back(std::move(s));
  }

  commutator_ = data_.commutator.value_or(IntVector(n));
  if (data_.kind != QuotientKind::ZxC2 && !commutator_.is_zero()) invalid("commutator cocycle only applies to ZxC2");
  if (commutator_.size() != n) invalid("commutator cocycle has wrong dimension");

  switch (data_.kind) {
    case QuotientKind::Klein:
      if (!(actions_[0] * actions_[1] * inverse_unimodular(actions_[0]) == inverse_unimodular(actions_[1])))
        invalid("Klein actions violate x y x^-1 = y^-1");
      break;
    case QuotientKind::ZxC2: {
      const IntMatrix& t = actions_[0];
      const IntMatrix& g = actions_[1];
      if (!(t * g == g * t)) invalid("ZxC2 actions do not commute");
      // Conjugating lift(g)^2 = s by lift(t) forces (I + G) c = (T - I) s.
      if (!((id + g) * commutator_ == (t - id) * squares_[1])) invalid("ZxC2 cocycles are inconsistent");
      break;
    }
    case QuotientKind::Dinf:
      dinf_pair_[0] = actions_[0] * actions_[1];
      dinf_pair_[1] = actions_[1] * actions_[0];
      break;
    default: break;
  }
}

std::vector<std::string> ExtensionGroup::generator_names() const {
  std::vector<std::string> out = data_.quotient_names;
  out.insert(out.end(), data_.lattice_names.begin(), data_.lattice_names.end());
  return out;
}

bool ExtensionGroup::is_order_two(std::size_t j) const {
  switch (data_.kind) {
    case QuotientKind::C2:
    case QuotientKind::Dinf: return true;
    case QuotientKind::ZxC2: return j == 1;
    default: return false;
  }
}

IntMatrix ExtensionGroup::action(const QuotientWord& q) const {
  const std::size_t n = data_.rank;
  switch (data_.kind) {
    case QuotientKind::Trivial: return IntMatrix::identity(n);
    case QuotientKind::C2: return q.a ? actions_[0] : IntMatrix::identity(n);
    case QuotientKind::Zq: return mat_pow(actions_[0], q.a);
    case QuotientKind::ZxC2: return mat_pow(actions_[0], q.a) * (q.b ? actions_[1] : IntMatrix::identity(n));
    case QuotientKind::Dinf: {
      if (q.a == 0) return IntMatrix::identity(n);
      const auto f = static_cast<std::size_t>(q.b);
      IntMatrix m = mat_pow(dinf_pair_[f], q.a / 2);
      if (q.a % 2) m = m * actions_[f];
      return m;
    }
    case QuotientKind::Klein: return mat_pow(actions_[0], q.a) * mat_pow(actions_[1], q.b);
  }
  throw std::logic_error("unknown quotient kind");
}

GroupElement ExtensionGroup::identity() const { return {IntVector(data_.rank), {}}; }

GroupElement ExtensionGroup::lattice_element(IntVector t) const {
  if (t.size() != data_.rank) throw DimensionError("lattice vector has wrong dimension");
  return {std::move(t), {}};
}

GroupElement ExtensionGroup::quotient_lift(const QuotientWord& q) const {
  GroupElement x = identity();
  for (const auto& s : quotient_syllables(q)) append(x, s.gen, s.exp);
  return x;
}

GroupElement ExtensionGroup::generator(std::size_t index) const {
  const std::size_t k = quotient_generator_count();
  if (index < k) {
    GroupElement x = identity();
    append(x, index, 1);
    return x;
  }
  if (index >= k + data_.rank) throw std::out_of_range("generator index out of range");
  IntVector t(data_.rank);
  t[index - k] = 1;
  return {std::move(t), {}};
}

GroupElement ExtensionGroup::generator(std::string_view name) const {
  const auto names = generator_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ParseError("unknown generator '" + std::string(name) + "'");
  return generator(static_cast<std::size_t>(it - names.begin()));
}

void ExtensionGroup::append_order_two(GroupElement& x, std::size_t j) const {
  switch (data_.kind) {
    case QuotientKind::C2:
      if (x.q.a == 0) {
        x.q.a = 1;
      } else {
        x.t += squares_[0];
        x.q.a = 0;
      }
      return;
    case QuotientKind::ZxC2:
      if (x.q.b == 0) {
        x.q.b = 1;
      } else {
        x.t += mat_pow(actions_[0], x.q.a) * squares_[1];
        x.q.b = 0;
      }
      return;
    case QuotientKind::Dinf: {
      auto& len = x.q.a;
      auto& first = x.q.b;
      const std::int64_t last = len == 0 ? -1 : ((len % 2) ? first : 1 - first);
      if (last == static_cast<std::int64_t>(j)) {
        // w' g g = w' s_g = action(w') s_g . w'
        --len;
        if (len == 0) first = 0;
        x.t += action(x.q) * squares_[j];
      } else {
        if (len == 0) first = static_cast<std::int64_t>(j);
        ++len;
      }
      return;
    }
    default: throw std::logic_error("order-two letter in a kind without one");
  }
}

void ExtensionGroup::append(GroupElement& x, std::size_t j, long exp) const {
  if (exp == 0) return;
  if (is_order_two(j)) {
    // g^e = (floor(e/2) s_g) . g^(e mod 2)
    const std::int64_t m = floor_div2(exp);
    const std::int64_t r = exp - 2 * m;
    if (m != 0) x.t += action(x.q) * (Int(static_cast<long>(m)) * squares_[j]);
    if (r) append_order_two(x, j);
    return;
  }
  switch (data_.kind) {
    case QuotientKind::Zq: x.q.a += exp; return;
    case QuotientKind::ZxC2: {
      // lift(g) lift(t) = (-c) lift(t) lift(g);  lift(g) lift(t)^-1 = (T^-1 c) lift(t)^-1 lift(g)
      const int step = exp > 0 ? 1 : -1;
      for (long i = 0; i < (exp > 0 ? exp : -exp); ++i) {
        if (x.q.b) {
          if (step > 0)
            x.t -= mat_pow(actions_[0], x.q.a) * commutator_;
          else
            x.t += mat_pow(actions_[0], x.q.a - 1) * commutator_;
        }
        x.q.a += step;
      }
      return;
    }
    case QuotientKind::Klein:
      if (j == 0) {
        x.q.a += exp;
        if (exp % 2) x.q.b = -x.q.b;
      } else {
        x.q.b += exp;
      }
      return;
    default: throw std::logic_error("letter does not belong to this quotient");
  }
}

bool ExtensionGroup::is_valid(const GroupElement& a) const {
  if (a.t.size() != data_.rank) return false;
  const auto& q = a.q;
  switch (data_.kind) {
    case QuotientKind::Trivial: return q.a == 0 && q.b == 0;
    case QuotientKind::C2: return (q.a == 0 || q.a == 1) && q.b == 0;
    case QuotientKind::Zq: return q.b == 0;
    case QuotientKind::ZxC2: return q.b == 0 || q.b == 1;
    case QuotientKind::Dinf: return q.a >= 0 && (q.b == 0 || q.b == 1) && (q.a > 0 || q.b == 0);
    case QuotientKind::Klein: return true;
  }
  return false;
}

void ExtensionGroup::check(const GroupElement& a) const {
  if (!is_valid(a)) throw std::invalid_argument("element does not belong to this extension group");
}

GroupElement ExtensionGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r = a;
  r.t += action(a.q) * b.t;
  for (const auto& s : quotient_syllables(b.q)) append(r, s.gen, s.exp);
  return r;
}

GroupElement ExtensionGroup::inverse(const GroupElement& a) const {
  check(a);
  GroupElement r = identity();
  const Word w = quotient_syllables(a.q);
  for (auto it = w.rbegin(); it != w.rend(); ++it) append(r, it->gen, -it->exp);
  r.t += action(r.q) * (-a.t);
  return r;
}

GroupElement ExtensionGroup::power(const GroupElement& a, long k) const {
  GroupElement base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1UL : static_cast<unsigned long>(k);
  GroupElement r = identity();
  while (e) {
    if (e & 1UL) r = multiply(r, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return r;
}

GroupElement ExtensionGroup::commutator(const GroupElement& a, const GroupElement& b) const {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

GroupElement ExtensionGroup::evaluate(const Word& w) const {
  const std::size_t k = quotient_generator_count();
  GroupElement r = identity();
  for (const auto& s : w) {
    if (s.gen < k) {
      append(r, s.gen, s.exp);
    } else if (s.gen < k + data_.rank) {
      IntVector t(data_.rank);
      t[s.gen - k] = s.exp;
      r.t += action(r.q) * t;
    } else {
      throw std::out_of_range("word references an unknown generator");
    }
  }
  return r;
}

GroupElement ExtensionGroup::evaluate(std::string_view word) const {
  return evaluate(FpPresentation(generator_names()).parse_word(word));
}

std::optional<std::int64_t> ExtensionGroup::quotient_order(const QuotientWord& q) const {
  switch (data_.kind) {
    case QuotientKind::Trivial: return 1;
    case QuotientKind::C2: return q.a ? 2 : 1;
    case QuotientKind::Zq: return q.a ? std::nullopt : std::optional<std::int64_t>(1);
    case QuotientKind::ZxC2:
      if (q.a) return std::nullopt;
      return q.b ? 2 : 1;
    case QuotientKind::Dinf:
      if (q.a == 0) return 1;
      if (q.a % 2) return 2;
      return std::nullopt;
    case QuotientKind::Klein: return (q.a == 0 && q.b == 0) ? std::optional<std::int64_t>(1) : std::nullopt;
  }
  return std::nullopt;
}

Word ExtensionGroup::quotient_syllables(const QuotientWord& q) const {
  Word w;
  switch (data_.kind) {
    case QuotientKind::Trivial: break;
    case QuotientKind::C2:
      if (q.a) w.push_back({0, 1});
      break;
    case QuotientKind::Zq:
      if (q.a) w.push_back({0, static_cast<long>(q.a)});
      break;
    case QuotientKind::ZxC2:
      if (q.a) w.push_back({0, static_cast<long>(q.a)});
      if (q.b) w.push_back({1, 1});
      break;
    case QuotientKind::Dinf:
      for (std::int64_t i = 0; i < q.a; ++i) w.push_back({static_cast<std::size_t>((q.b + i) % 2), 1});
      break;
    case QuotientKind::Klein:
      if (q.a) w.push_back({0, static_cast<long>(q.a)});
      if (q.b) w.push_back({1, static_cast<long>(q.b)});
      break;
  }
  return w;
}

std::int64_t ExtensionGroup::quotient_length(const QuotientWord& q) const {
  std::int64_t len = 0;
  for (const auto& s : quotient_syllables(q)) len += s.exp < 0 ? -s.exp : s.exp;
  return len;
}

int ExtensionGroup::axis_sign(const QuotientWord& q) const {
  if (!is_tagged()) throw std::invalid_argument("group carries no axis-sign tagging");
  int sign = 1;
  for (const auto& s : quotient_syllables(q))
    if (s.exp % 2 && data_.axis_signs.at(data_.quotient_names[s.gen]) < 0) sign = -sign;
  return sign;
}

Word ExtensionGroup::lattice_word(const IntVector& t) const {
  Word w;
  const std::size_t k = quotient_generator_count();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) w.push_back({k + i, to_long(t[i])});
  return w;
}

FpPresentation ExtensionGroup::presentation() const {
  FpPresentation p(generator_names());
  const std::size_t k = quotient_generator_count();
  const std::size_t n = data_.rank;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.add_relator({{k + i, 1}, {k + j, 1}, {k + i, -1}, {k + j, -1}});
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t i = 0; i < n; ++i) {
      Word w{{g, 1}, {k + i, 1}, {g, -1}};
      p.add_relator(concat(w, lattice_word(-actions_[g].column(i))));
    }
  switch (data_.kind) {
    case QuotientKind::C2:
    case QuotientKind::Dinf:
      for (std::size_t g = 0; g < k; ++g) p.add_relator(concat({{g, 2}}, lattice_word(-squares_[g])));
      break;
    case QuotientKind::ZxC2:
      p.add_relator(concat({{1, 2}}, lattice_word(-squares_[1])));
      p.add_relator(concat({{0, 1}, {1, 1}, {0, -1}, {1, -1}}, lattice_word(-commutator_)));
      break;
    case QuotientKind::Klein: p.add_relator({{0, 1}, {1, 1}, {0, -1}, {1, 1}}); break;
    default: break;
  }
  return p;
}

std::string ExtensionGroup::format(const GroupElement& a) const {
  const auto names = generator_names();
  const FpPresentation p(names);
  Word w = lattice_word(a.t);
  for (const auto& s : quotient_syllables(a.q)) w.push_back(s);
  // Merge adjacent equal letters (Dinf words never repeat, but keep output tidy).
  return p.format(w);
}

}  // namespace solfour::ext
