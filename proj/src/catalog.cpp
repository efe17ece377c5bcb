#include "nilcover/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "nilcover/errors.hpp"
#include "nilcover/finite_field.hpp"
#include "nilcover/structure.hpp"

namespace nilcover::catalog {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }
  }

  GroupSpec parse() {
    if (text_.empty()) fail("empty group spec");
    GroupSpec spec = expr();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return spec;
  }

 private:
  using Kind = GroupSpec::Kind;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad group spec '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  bool eat(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!eat(token)) fail("expected '" + std::string(token) + "'");
  }

  unsigned number() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (value > 1'000'000) fail("number too large");
    }
    if (value == 0) fail("parameter must be positive");
    return static_cast<unsigned>(value);
  }

  static GroupSpec make(Kind kind, unsigned param, std::vector<GroupSpec> children = {}) {
    GroupSpec s;
    s.kind_ = kind;
    s.param_ = param;
    s.children_ = std::move(children);
    return s;
  }

  GroupSpec expr() {
    std::vector<GroupSpec> factors;
    auto push = [&](GroupSpec s) {
      if (s.kind_ == Kind::Product) {
        for (auto& c : s.children_) factors.push_back(std::move(c));
      } else {
        factors.push_back(std::move(s));
      }
    };
    push(postfix());
    while (eat("x")) push(postfix());
    if (factors.size() == 1) return std::move(factors.front());
    return make(Kind::Product, 0, std::move(factors));
  }

  GroupSpec postfix() {
    GroupSpec s = primary();
    while (eat("/")) {
      expect("Z");
      Kind kind = eat("*") ? Kind::ModHypercentre : Kind::ModCenter;
      std::vector<GroupSpec> child;
      child.push_back(std::move(s));
      s = make(kind, 0, std::move(child));
    }
    return s;
  }

  GroupSpec primary() {
    if (eat("(")) {
      GroupSpec s = expr();
      expect(")");
      return s;
    }
    if (eat("PSL(3,")) {
      unsigned q = number();
      if (q != 3) fail("only PSL(3,3) is supported");
      expect(")");
      return make(Kind::PSL33, 3);
    }
    if (eat("PSL(2,")) {
      unsigned q = number();
      expect(")");
      return make(Kind::PSL2, q);
    }
    if (eat("SL(2,")) {
      unsigned q = number();
      expect(")");
      return make(Kind::SL2, q);
    }
    if (eat("S")) return make(Kind::Symmetric, number());
    if (eat("A")) return make(Kind::Alternating, number());
    if (eat("C")) return make(Kind::Cyclic, number());
    if (eat("D")) return make(Kind::Dihedral, number());
    if (eat("Q")) {
      unsigned k = number();
      if (k != 8 && k != 16 && k != 32) fail("quaternion order must be 8, 16 or 32");
      return make(Kind::Quaternion, k);
    }
    fail("expected a group atom");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

GroupSpec GroupSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

std::string GroupSpec::render() const {
  const std::string k = std::to_string(param_);
  switch (kind_) {
    case Kind::Symmetric: return "S" + k;
    case Kind::Alternating: return "A" + k;
    case Kind::Cyclic: return "C" + k;
    case Kind::Dihedral: return "D" + k;
    case Kind::Quaternion: return "Q" + k;
    case Kind::SL2: return "SL(2," + k + ")";
    case Kind::PSL2: return "PSL(2," + k + ")";
    case Kind::PSL33: return "PSL(3,3)";
    case Kind::Product: {
      std::string out;
      for (const auto& c : children_) {
        if (!out.empty()) out += "x";
        out += c.render();
      }
      return out;
    }
    case Kind::ModCenter:
    case Kind::ModHypercentre: {
      const GroupSpec& c = children_.front();
      std::string inner = c.kind_ == Kind::Product ? "(" + c.render() + ")" : c.render();
      return inner + (kind_ == Kind::ModCenter ? "/Z" : "/Z*");
    }
  }
  return {};
}

namespace {

Permutation from_images(std::vector<Point> images) { return Permutation(std::move(images)); }

Permutation cycle_on(std::size_t degree, std::initializer_list<Point> points) {
  std::vector<Point> out(degree);
  std::iota(out.begin(), out.end(), Point{0});
  const std::vector<Point> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) out[pts[i]] = pts[(i + 1) % pts.size()];
  return from_images(std::move(out));
}

Permutation long_cycle(std::size_t degree) {
  std::vector<Point> out(degree);
  for (std::size_t i = 0; i < degree; ++i) out[i] = static_cast<Point>((i + 1) % degree);
  return from_images(std::move(out));
}

}  // namespace

GroupPtr symmetric(unsigned k, const BuildOptions& opts) {
  if (k == 0) throw std::invalid_argument("S0 is not defined");
  std::vector<Permutation> gens;
  if (k >= 2) gens.push_back(cycle_on(k, {0, 1}));
  if (k >= 3) gens.push_back(long_cycle(k));
  return close_generators(k, std::move(gens), opts.cap, "S" + std::to_string(k));
}

GroupPtr alternating(unsigned k, const BuildOptions& opts) {
  if (k == 0) throw std::invalid_argument("A0 is not defined");
  std::vector<Permutation> gens;
  for (Point i = 2; i < k; ++i) gens.push_back(cycle_on(k, {0, 1, i}));
  return close_generators(k, std::move(gens), opts.cap, "A" + std::to_string(k));
}

GroupPtr cyclic(unsigned k, const BuildOptions& opts) {
  if (k == 0) throw std::invalid_argument("C0 is not defined");
  std::vector<Permutation> gens;
  if (k >= 2) gens.push_back(long_cycle(k));
  return close_generators(k, std::move(gens), opts.cap, "C" + std::to_string(k));
}

GroupPtr dihedral(unsigned k, const BuildOptions& opts) {
  const std::string label = "D" + std::to_string(k);
  if (k == 0) throw std::invalid_argument("D0 is not defined");
  if (k == 1) return close_generators(2, {cycle_on(2, {0, 1})}, opts.cap, label);
  if (k == 2) return close_generators(4, {cycle_on(4, {0, 1}), cycle_on(4, {2, 3})}, opts.cap, label);
  std::vector<Point> reflection(k);
  for (std::size_t i = 0; i < k; ++i) reflection[i] = static_cast<Point>((k - i) % k);
  return close_generators(k, {long_cycle(k), from_images(std::move(reflection))}, opts.cap, label);
}

GroupPtr quaternion(unsigned k, const BuildOptions& opts) {
  if (k < 8 || (k & (k - 1)) != 0) throw std::invalid_argument("quaternion order must be a power of 2, at least 8");
  // <a, b | a^(2m) = 1, b^2 = a^m, a^b = a^-1>, elements a^i b^j numbered i + 2m j,
  // acting on themselves by right multiplication.
  const unsigned two_m = k / 2, m = k / 4;
  auto product = [&](unsigned x, unsigned y) {
    unsigned i = x % two_m, j = x / two_m, s = y % two_m, t = y / two_m;
    unsigned e = j ? (i + two_m - s) % two_m : (i + s) % two_m;
    unsigned f = j + t;
    if (f == 2) {
      e = (e + m) % two_m;
      f = 0;
    }
    return e + two_m * f;
  };
  auto right_mult = [&](unsigned y) {
    std::vector<Point> images(k);
    for (unsigned x = 0; x < k; ++x) images[x] = product(x, y);
    return from_images(std::move(images));
  };
  return close_generators(k, {right_mult(1), right_mult(two_m)}, opts.cap, "Q" + std::to_string(k));
}

namespace {

struct Matrix2 {
  unsigned a, b, c, d;
};

std::vector<Matrix2> transvections(const FiniteField& f) {
  std::vector<Matrix2> out;
  for (unsigned t : f.basis()) {
    out.push_back({1, t, 0, 1});
    out.push_back({1, 0, t, 1});
  }
  return out;
}

}  // namespace

GroupPtr special_linear_2(unsigned q, const BuildOptions& opts) {
  FiniteField f(q);
  const std::size_t degree = static_cast<std::size_t>(q) * q - 1;
  std::vector<Permutation> gens;
  for (const auto& m : transvections(f)) {
    std::vector<Point> images(degree);
    for (unsigned x = 0; x < q; ++x) {
      for (unsigned y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        unsigned nx = f.add(f.mul(m.a, x), f.mul(m.b, y));
        unsigned ny = f.add(f.mul(m.c, x), f.mul(m.d, y));
        images[x * q + y - 1] = nx * q + ny - 1;
      }
    }
    gens.push_back(from_images(std::move(images)));
  }
  return close_generators(degree, std::move(gens), opts.cap, "SL(2," + std::to_string(q) + ")");
}

GroupPtr projective_special_linear_2(unsigned q, const BuildOptions& opts) {
  FiniteField f(q);
  const Point infinity = q;
  std::vector<Permutation> gens;
  for (const auto& m : transvections(f)) {
    std::vector<Point> images(q + 1);
    for (unsigned z = 0; z <= q; ++z) {
      unsigned num, den;
      if (z == infinity) {
        num = m.a;
        den = m.c;
      } else {
        num = f.add(f.mul(m.a, z), m.b);
        den = f.add(f.mul(m.c, z), m.d);
      }
      images[z] = den == 0 ? infinity : f.mul(num, f.inv(den));
    }
    gens.push_back(from_images(std::move(images)));
  }
  return close_generators(q + 1, std::move(gens), opts.cap, "PSL(2," + std::to_string(q) + ")");
}

GroupPtr projective_special_linear_3_3(const BuildOptions& opts) {
  constexpr unsigned q = 3;
  // Projective points as normalised vectors (first nonzero coordinate 1).
  std::vector<std::array<unsigned, 3>> points;
  for (unsigned v = 1; v < q * q * q; ++v) {
    std::array<unsigned, 3> x{v / 9, (v / 3) % 3, v % 3};
    unsigned lead = x[0] ? x[0] : (x[1] ? x[1] : x[2]);
    if (lead == 1) points.push_back(x);
  }
  auto normalise = [](std::array<unsigned, 3> x) {
    unsigned lead = x[0] ? x[0] : (x[1] ? x[1] : x[2]);
    unsigned inv = lead == 1 ? 1 : 2;  // inverses mod 3
    for (auto& c : x) c = c * inv % q;
    return x;
  };
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> images(points.size());
      for (std::size_t k = 0; k < points.size(); ++k) {
        auto x = points[k];
        x[i] = (x[i] + x[j]) % q;
        auto y = normalise(x);
        images[k] = static_cast<Point>(std::find(points.begin(), points.end(), y) - points.begin());
      }
      gens.push_back(from_images(std::move(images)));
    }
  }
  return close_generators(points.size(), std::move(gens), opts.cap, "PSL(3,3)");
}

GroupPtr direct_product(std::span<const GroupPtr> factors, const BuildOptions& opts) {
  std::size_t degree = 0;
  std::string label;
  for (const auto& f : factors) {
    degree += f->degree();
    if (!label.empty()) label += "x";
    label += f->label();
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& g : factors[i]->generators()) {
      std::vector<Permutation> parts;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        parts.push_back(i == j ? g : Permutation::identity(factors[j]->degree()));
      }
      gens.push_back(concatenate(parts));
    }
  }
  return close_generators(degree, std::move(gens), opts.cap, std::move(label));
}

Index embed(const FiniteGroup& product, std::span<const GroupPtr> factors, std::span<const Index> parts) {
  if (factors.size() != parts.size()) throw std::invalid_argument("one element per factor required");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < factors.size(); ++i) perms.push_back(factors[i]->element(parts[i]));
  return product.index_of(concatenate(perms));
}

GroupPtr build(const GroupSpec& spec, const BuildOptions& opts) {
  using Kind = GroupSpec::Kind;
  GroupPtr g;
  switch (spec.kind()) {
    case Kind::Symmetric: g = symmetric(spec.parameter(), opts); break;
    case Kind::Alternating: g = alternating(spec.parameter(), opts); break;
    case Kind::Cyclic: g = cyclic(spec.parameter(), opts); break;
    case Kind::Dihedral: g = dihedral(spec.parameter(), opts); break;
    case Kind::Quaternion: g = quaternion(spec.parameter(), opts); break;
    case Kind::SL2: g = special_linear_2(spec.parameter(), opts); break;
    case Kind::PSL2: g = projective_special_linear_2(spec.parameter(), opts); break;
    case Kind::PSL33: g = projective_special_linear_3_3(opts); break;
    case Kind::Product: {
      std::vector<GroupPtr> factors;
      for (const auto& c : spec.children()) factors.push_back(build(c, opts));
      g = direct_product(factors, opts);
      break;
    }
    case Kind::ModCenter:
    case Kind::ModHypercentre: {
      GroupPtr inner = build(spec.children().front(), opts);
      Subgroup n = spec.kind() == Kind::ModCenter ? center(*inner) : hypercentre(*inner).hypercentre;
      return quotient(*inner, n, spec.render()).group;
    }
  }
  // Relabel with the canonical spec text when it differs (e.g. products).
  if (g->label() != spec.render()) {
    return close_generators(g->degree(), g->generators(), opts.cap, spec.render());
  }
  return g;
}

GroupPtr build(std::string_view spec, const BuildOptions& opts) { return build(GroupSpec::parse(spec), opts); }

}  // namespace nilcover::catalog
