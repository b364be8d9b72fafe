#include "ecgr/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <utility>

namespace ecgr {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic of the field with p^n elements, p prime, p^n small. Elements are
// indices in [0, p^n); the digits of an index base p are the coefficients of
// a polynomial modulo a fixed irreducible monic modulus (the one with the
// smallest index encoding, so the construction is deterministic).

struct FiniteField {
  unsigned p = 0;
  unsigned n = 0;
  unsigned q = 0;
  std::vector<unsigned> modulus; // n+1 coefficients, low to high, monic

  std::vector<unsigned> decode(unsigned index) const {
    std::vector<unsigned> coeffs(n);
    for (unsigned i = 0; i < n; ++i) {
      coeffs[i] = index % p;
      index /= p;
    }
    return coeffs;
  }

  unsigned encode(const std::vector<unsigned>& coeffs) const {
    unsigned index = 0;
    for (unsigned i = n; i-- > 0;)
      index = index * p + coeffs[i];
    return index;
  }

  unsigned add(unsigned a, unsigned b) const {
    auto ca = decode(a), cb = decode(b);
    for (unsigned i = 0; i < n; ++i)
      ca[i] = (ca[i] + cb[i]) % p;
    return encode(ca);
  }

  unsigned mul(unsigned a, unsigned b) const {
    if (n == 1)
      return (a * b) % p;
    auto ca = decode(a), cb = decode(b);
    std::vector<unsigned> buf(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        buf[i + j] = (buf[i + j] + ca[i] * cb[j]) % p;
    for (unsigned i = 2 * n - 2; i >= n; --i) { // x^n == -(low part of modulus)
      unsigned c = buf[i];
      buf[i] = 0;
      for (unsigned j = 0; j < n; ++j)
        buf[i - n + j] = (buf[i - n + j] + c * (p - modulus[j])) % p;
    }
    buf.resize(n);
    return encode(buf);
  }

  unsigned pow(unsigned a, unsigned e) const {
    unsigned result = 1;
    for (unsigned i = 0; i < e; ++i)
      result = mul(result, a);
    return result;
  }

  unsigned multiplicative_order(unsigned a) const {
    unsigned value = a, order = 1;
    while (value != 1) {
      value = mul(value, a);
      ++order;
    }
    return order;
  }

  unsigned generator() const {
    for (unsigned a = 1; a < q; ++a)
      if (multiplicative_order(a) == q - 1)
        return a;
    throw Error("field has no multiplicative generator"); // unreachable
  }
};

bool is_prime(unsigned p) {
  if (p < 2)
    return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

/// Remainder of a by b over F_p, coefficients low to high, b monic.
bool divides_poly(const std::vector<unsigned>& b, std::vector<unsigned> a,
                  unsigned p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    unsigned lead = a.back();
    if (lead != 0)
      for (std::size_t j = 0; j <= db; ++j)
        a[a.size() - 1 - db + j] =
            (a[a.size() - 1 - db + j] + lead * (p - b[j])) % p;
    a.pop_back();
  }
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

FiniteField make_field(unsigned p, unsigned n) {
  FiniteField f;
  f.p = p;
  f.n = n;
  f.q = 1;
  for (unsigned i = 0; i < n; ++i)
    f.q *= p;
  if (n == 1)
    return f;

  // Smallest monic irreducible modulus: no monic divisor of degree <= n/2.
  unsigned low_count = 1;
  for (unsigned i = 0; i < n; ++i)
    low_count *= p;
  for (unsigned low = 0; low < low_count; ++low) {
    std::vector<unsigned> candidate(n + 1, 0);
    unsigned rest = low;
    for (unsigned i = 0; i < n; ++i) {
      candidate[i] = rest % p;
      rest /= p;
    }
    candidate[n] = 1;
    bool irreducible = true;
    for (unsigned d = 1; irreducible && 2 * d <= n; ++d) {
      unsigned div_count = 1;
      for (unsigned i = 0; i < d; ++i)
        div_count *= p;
      for (unsigned enc = 0; enc < div_count && irreducible; ++enc) {
        std::vector<unsigned> divisor(d + 1, 0);
        unsigned r = enc;
        for (unsigned i = 0; i < d; ++i) {
          divisor[i] = r % p;
          r /= p;
        }
        divisor[d] = 1;
        irreducible = !divides_poly(divisor, candidate, p);
      }
    }
    if (irreducible) {
      f.modulus = std::move(candidate);
      return f;
    }
  }
  throw Error("no irreducible modulus found"); // unreachable
}

// ---------------------------------------------------------------------------
// Mixed-radix coordinates for products of cyclic groups, first factor most
// significant.

struct MixedRadix {
  std::vector<unsigned> dims;
  unsigned total = 1;

  explicit MixedRadix(std::vector<unsigned> d) : dims(std::move(d)) {
    for (unsigned x : dims)
      total *= x;
  }

  std::vector<unsigned> decode(unsigned index) const {
    std::vector<unsigned> c(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      c[i] = index % dims[i];
      index /= dims[i];
    }
    return c;
  }

  unsigned encode(const std::vector<unsigned>& c) const {
    unsigned index = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
      index = index * dims[i] + c[i];
    return index;
  }

  unsigned add_unit(unsigned index, std::size_t factor) const {
    auto c = decode(index);
    c[factor] = (c[factor] + 1) % dims[factor];
    return encode(c);
  }

  unsigned negate(unsigned index) const {
    auto c = decode(index);
    for (std::size_t i = 0; i < dims.size(); ++i)
      c[i] = (dims[i] - c[i]) % dims[i];
    return encode(c);
  }

  unsigned add(unsigned a, unsigned b) const {
    auto ca = decode(a), cb = decode(b);
    for (std::size_t i = 0; i < dims.size(); ++i)
      ca[i] = (ca[i] + cb[i]) % dims[i];
    return encode(ca);
  }
};

Permutation table_permutation(unsigned degree, auto&& image_of) {
  std::vector<Point> images(degree);
  for (Point x = 0; x < degree; ++x)
    images[x] = image_of(x);
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Structural tag detection.

bool detect_exponent_gt_two(const PermGroup& g) {
  return std::any_of(g.elements().begin(), g.elements().end(),
                     [](const Permutation& e) {
                       return !compose(e, e).is_identity();
                     });
}

bool all_commute(const std::vector<const Permutation*>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (compose(*members[i], *members[j]) != compose(*members[j], *members[i]))
        return false;
  return true;
}

/// True iff g has an abelian subgroup A of index 2 and an element x outside A
/// whose square lies in A with order exactly 2 and that inverts A by
/// conjugation. Every index-2 subgroup contains the subgroup generated by all
/// squares, whose quotient is elementary abelian, so the candidates are the
/// kernels of the nonzero functionals on that quotient.
bool detect_generalized_dicyclic(const PermGroup& g) {
  const auto& elems = g.elements();
  const std::size_t total = elems.size();
  if (total < 4 || total % 2 != 0)
    return false;
  const unsigned degree = g.degree();

  // Subgroup generated by all squares, via a greedily thinned generator set.
  std::vector<Permutation> squares;
  squares.reserve(total);
  for (const Permutation& e : elems)
    squares.push_back(compose(e, e));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  std::vector<Permutation> gens;
  PermGroup span = PermGroup::identity(degree);
  for (const Permutation& s : squares)
    if (!span.contains(s)) {
      gens.push_back(s);
      span = PermGroup(degree, gens, total);
    }
  const std::vector<Permutation>& base = span.elements();
  if (base.size() == total)
    return false; // no even quotient at all

  // Label the cosets of the square subgroup; reps are the first members.
  std::vector<unsigned> coset(total, ~0u);
  std::vector<std::size_t> rep;
  auto element_index = [&](const Permutation& p) {
    return static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  for (std::size_t i = 0; i < total; ++i) {
    if (coset[i] != ~0u)
      continue;
    const auto label = static_cast<unsigned>(rep.size());
    rep.push_back(i);
    for (const Permutation& m : base)
      coset[element_index(compose(elems[i], m))] = label;
  }
  const std::size_t quotient = rep.size();

  // F2 coordinates of each coset over a greedy basis of the quotient.
  std::vector<unsigned> coords(quotient, ~0u);
  coords[coset[0]] = 0; // identity is the globally smallest element
  unsigned rank = 0;
  for (std::size_t l = 0; l < quotient; ++l) {
    if (coords[l] != ~0u)
      continue;
    const unsigned bit = 1u << rank++;
    for (std::size_t m = 0; m < quotient; ++m)
      if (coords[m] != ~0u && !(coords[m] & bit)) {
        unsigned image = coset[element_index(compose(elems[rep[l]], elems[rep[m]]))];
        coords[image] = coords[m] | bit;
      }
  }

  // Each nonzero functional cuts out one index-2 subgroup.
  for (unsigned functional = 1; functional < (1u << rank); ++functional) {
    std::vector<const Permutation*> members;
    std::vector<const Permutation*> outside;
    for (std::size_t i = 0; i < total; ++i) {
      if (std::popcount(coords[coset[i]] & functional) % 2 == 0)
        members.push_back(&elems[i]);
      else
        outside.push_back(&elems[i]);
    }
    if (!all_commute(members))
      continue;
    for (const Permutation* x : outside) {
      const Permutation x2 = compose(*x, *x);
      if (x2.is_identity() || !compose(x2, x2).is_identity())
        continue; // the square must have order exactly 2
      const Permutation xinv = x->inverse();
      bool inverts = true;
      for (const Permutation* a : members) {
        if (compose(xinv, compose(*a, *x)) != a->inverse()) {
          inverts = false;
          break;
        }
      }
      if (inverts)
        return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Spec parsing: "name" or "name(arg1,arg2,...)" with unsigned arguments.

struct ParsedSpec {
  std::string name;
  std::vector<unsigned> args;
};

ParsedSpec parse_spec(const std::string& spec) {
  ParsedSpec parsed;
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i])))
      ++i;
  };
  skip_blank();
  while (i < spec.size() &&
         (std::isalnum(static_cast<unsigned char>(spec[i])) || spec[i] == '_'))
    parsed.name += spec[i++];
  if (parsed.name.empty())
    throw ParseError("empty group spec: '" + spec + "'");
  skip_blank();
  if (i < spec.size() && spec[i] == '(') {
    ++i;
    skip_blank();
    while (i < spec.size() && spec[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(spec[i])))
        throw ParseError("expected a number in group spec: '" + spec + "'");
      unsigned long value = 0;
      while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
        value = value * 10 + static_cast<unsigned long>(spec[i] - '0');
        if (value > 1'000'000)
          throw ParseError("group spec parameter out of range");
        ++i;
      }
      parsed.args.push_back(static_cast<unsigned>(value));
      skip_blank();
      if (i < spec.size() && spec[i] == ',') {
        ++i;
        skip_blank();
      }
    }
    if (i >= spec.size())
      throw ParseError("unterminated parameter list: '" + spec + "'");
    ++i;
    skip_blank();
  }
  if (i != spec.size())
    throw ParseError("trailing characters in group spec: '" + spec + "'");
  return parsed;
}

void expect_args(const ParsedSpec& s, std::size_t count) {
  if (s.args.size() != count)
    throw ParseError(s.name + " expects " + std::to_string(count) +
                     " parameter(s)");
}

void check_constructed(bool ok, const std::string& what) {
  if (!ok)
    throw Error("construction error: " + what);
}

PermGroup build_regular_abelian(const std::vector<unsigned>& dims) {
  MixedRadix radix(dims);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < dims.size(); ++i)
    gens.push_back(table_permutation(
        radix.total, [&](Point x) { return radix.add_unit(x, i); }));
  return generate(std::move(gens));
}

PermGroup build_generalized_dicyclic(const std::vector<unsigned>& dims) {
  MixedRadix radix(dims);
  const unsigned base = radix.total;
  const unsigned degree = 2 * base;

  // Designated order-2 base element: half of the first even factor.
  std::vector<unsigned> half(dims.size(), 0);
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] % 2 == 0) {
      half[i] = dims[i] / 2;
      break;
    }
  const unsigned y = radix.encode(half);

  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < dims.size(); ++i)
    gens.push_back(table_permutation(degree, [&](Point x) {
      const unsigned flag = x / base;
      return flag * base + radix.add_unit(x % base, i);
    }));
  // The extending element: (a, 0) -> (-a, 1) and (a, 1) -> (y - a, 0).
  gens.push_back(table_permutation(degree, [&](Point x) {
    const unsigned a = x % base;
    if (x < base)
      return base + radix.negate(a);
    return radix.add(y, radix.negate(a));
  }));
  return generate(std::move(gens));
}

PermGroup build_field_subgroup(unsigned p, unsigned n, unsigned k) {
  const FiniteField field = make_field(p, n);
  std::vector<Permutation> gens;
  unsigned basis = 1;
  for (unsigned i = 0; i < n; ++i) { // translations by 1, x, x^2, ...
    gens.push_back(table_permutation(
        field.q, [&](Point v) { return field.add(v, basis); }));
    basis *= p;
  }
  const unsigned multiplier = field.pow(field.generator(), 2 * k);
  gens.push_back(table_permutation(
      field.q, [&](Point v) { return field.mul(multiplier, v); }));
  return generate(std::move(gens));
}

} // namespace

std::vector<std::string> CatalogEntry::tag_strings() const {
  std::vector<std::string> tags;
  if (regular)
    tags.push_back("regular");
  if (transitive)
    tags.push_back("transitive");
  if (abelian)
    tags.push_back("abelian");
  if (exponent_gt_two)
    tags.push_back("exponent>2");
  if (generalized_dicyclic)
    tags.push_back("generalized-dicyclic");
  if (all_orbitals_self_paired)
    tags.push_back("all-orbitals-self-paired");
  return tags;
}

CatalogEntry catalog_entry(std::string name, PermGroup group) {
  CatalogEntry e{std::move(name), std::move(group)};
  e.transitive = e.group.is_transitive();
  e.regular = e.transitive && e.group.order() == e.group.degree();
  e.abelian = e.group.is_abelian();
  e.exponent_gt_two = detect_exponent_gt_two(e.group);
  e.generalized_dicyclic = detect_generalized_dicyclic(e.group);
  e.all_orbitals_self_paired =
      e.group.degree() >= 2 && !compute_orbitals(e.group).has_non_self_paired();
  return e;
}

CatalogEntry make(const std::string& spec) {
  const ParsedSpec s = parse_spec(spec);

  if (s.name == "identity") {
    expect_args(s, 1);
    const unsigned n = s.args[0];
    if (n < 1 || n > 64)
      throw ParseError("identity(n) needs 1 <= n <= 64");
    auto e = catalog_entry("identity(" + std::to_string(n) + ")",
                           PermGroup::identity(n));
    check_constructed(e.group.order() == 1, "identity group must be trivial");
    return e;
  }
  if (s.name == "cyclic") {
    expect_args(s, 1);
    const unsigned n = s.args[0];
    if (n < 2 || n > 64)
      throw ParseError("cyclic(n) needs 2 <= n <= 64");
    auto e = catalog_entry(
        "cyclic(" + std::to_string(n) + ")",
        generate({table_permutation(n, [n](Point x) { return (x + 1) % n; })}));
    check_constructed(e.regular && e.group.order() == n,
                      "cyclic group must be regular of order n");
    return e;
  }
  if (s.name == "symmetric") {
    expect_args(s, 1);
    const unsigned n = s.args[0];
    if (n < 2 || n > 8)
      throw ParseError("symmetric(n) needs 2 <= n <= 8");
    std::vector<Permutation> gens;
    gens.push_back(Permutation::parse_cycles("(0 1)", n));
    if (n > 2)
      gens.push_back(table_permutation(n, [n](Point x) { return (x + 1) % n; }));
    auto e = catalog_entry("symmetric(" + std::to_string(n) + ")",
                           generate(std::move(gens)));
    std::uint64_t fact = 1;
    for (unsigned i = 2; i <= n; ++i)
      fact *= i;
    check_constructed(e.group.order() == fact,
                      "symmetric group must have order n!");
    return e;
  }
  if (s.name == "dihedral") {
    expect_args(s, 1);
    const unsigned n = s.args[0];
    if (n < 3 || n > 32)
      throw ParseError("dihedral(n) needs 3 <= n <= 32");
    auto e = catalog_entry(
        "dihedral(" + std::to_string(n) + ")",
        generate({table_permutation(n, [n](Point x) { return (x + 1) % n; }),
                  table_permutation(n, [n](Point x) { return (n - x) % n; })}));
    check_constructed(e.transitive && e.group.order() == 2ull * n,
                      "dihedral group must be transitive of order 2n");
    return e;
  }
  if (s.name == "s2_power") {
    expect_args(s, 1);
    const unsigned k = s.args[0];
    if (k < 1 || k > 5)
      throw ParseError("s2_power(k) needs 1 <= k <= 5");
    PermGroup power = generate({Permutation::parse_cycles("(0 1)", 2)});
    for (unsigned i = 1; i < k; ++i)
      power = direct_product(power, generate({Permutation::parse_cycles("(0 1)", 2)}));
    auto e = catalog_entry("s2_power(" + std::to_string(k) + ")", std::move(power));
    check_constructed(e.regular && !e.exponent_gt_two &&
                          e.group.order() == (1ull << k),
                      "s2_power must be regular of exponent 2");
    return e;
  }
  if (s.name == "regular_abelian") {
    if (s.args.empty())
      throw ParseError("regular_abelian needs at least one factor");
    unsigned long total = 1;
    for (unsigned d : s.args) {
      if (d < 2)
        throw ParseError("regular_abelian factors must be >= 2");
      total *= d;
      if (total > 64)
        throw ParseError("regular_abelian order must be <= 64");
    }
    std::string name = "regular_abelian(";
    for (std::size_t i = 0; i < s.args.size(); ++i)
      name += (i ? "," : "") + std::to_string(s.args[i]);
    name += ")";
    auto e = catalog_entry(std::move(name), build_regular_abelian(s.args));
    check_constructed(e.regular && e.abelian && e.group.order() == total,
                      "regular_abelian must be regular abelian of full order");
    return e;
  }
  if (s.name == "generalized_dicyclic") {
    if (s.args.empty())
      throw ParseError("generalized_dicyclic needs at least one factor");
    unsigned long total = 1;
    for (unsigned d : s.args) {
      if (d < 2)
        throw ParseError("generalized_dicyclic factors must be >= 2");
      total *= d;
      if (total > 32)
        throw ParseError("generalized_dicyclic base order must be <= 32");
    }
    if (total % 2 != 0)
      throw ParseError("generalized_dicyclic base order must be even");
    std::string name = "generalized_dicyclic(";
    for (std::size_t i = 0; i < s.args.size(); ++i)
      name += (i ? "," : "") + std::to_string(s.args[i]);
    name += ")";
    auto e = catalog_entry(std::move(name), build_generalized_dicyclic(s.args));
    check_constructed(e.regular && e.generalized_dicyclic &&
                          e.group.order() == 2 * total,
                      "generalized_dicyclic must be regular with the "
                      "dicyclic structure");
    return e;
  }
  if (s.name == "example7") {
    expect_args(s, 0);
    auto e = catalog_entry(
        "example7", generate({Permutation::parse_cycles("(0 1 2 3 4 5 6)", 7),
                              Permutation::parse_cycles("(1 2 4)(3 6 5)", 7)}));
    check_constructed(e.transitive && e.group.order() == 21,
                      "example7 must be transitive of order 21");
    return e;
  }
  if (s.name == "field_subgroup") {
    expect_args(s, 3);
    const unsigned p = s.args[0], n = s.args[1], k = s.args[2];
    if (!is_prime(p))
      throw ParseError("field_subgroup needs a prime p");
    if (n < 1 || k < 1 || n % k != 0)
      throw ParseError("field_subgroup needs n >= 1 and k dividing n");
    unsigned long q = 1;
    for (unsigned i = 0; i < n; ++i) {
      q *= p;
      if (q > 64)
        throw ParseError("field_subgroup needs p^n <= 64");
    }
    auto e = catalog_entry("field_subgroup(" + std::to_string(p) + "," +
                               std::to_string(n) + "," + std::to_string(k) + ")",
                           build_field_subgroup(p, n, k));
    const unsigned long expected =
        q * ((q - 1) / std::gcd<unsigned long>(2 * k, q - 1));
    check_constructed(e.transitive && e.group.order() == expected,
                      "field_subgroup must be transitive of order "
                      "q*(q-1)/gcd(2k,q-1)");
    return e;
  }
  throw ParseError("unknown group spec '" + s.name + "'");
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> entries;
  for (const char* spec :
       {"identity(2)", "identity(3)", "symmetric(2)", "cyclic(3)", "cyclic(4)",
        "cyclic(5)", "cyclic(6)", "cyclic(7)", "symmetric(3)", "symmetric(4)",
        "dihedral(4)", "dihedral(5)", "s2_power(2)", "example7",
        "field_subgroup(3,2,1)", "cyclic(8)", "regular_abelian(2,4)",
        "s2_power(3)", "generalized_dicyclic(4)", "generalized_dicyclic(2,2)"})
    entries.push_back(make(spec));
  // Two groups kept by explicit generators: a transposition padded with a
  // fixed point, and the sharply 2-transitive affine group on 5 points.
  entries.push_back(
      catalog_entry("s2_on_3", generate({Permutation::parse_cycles("(0 1)", 3)})));
  entries.push_back(catalog_entry(
      "agl_1_5", generate({Permutation::parse_cycles("(0 1 2 3 4)", 5),
                           Permutation::parse_cycles("(1 2 4 3)", 5)})));
  return entries;
}

nlohmann::ordered_json CensusEntryRow::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["type"] = "entry";
  j["name"] = name;
  j["degree"] = degree;
  j["order"] = order;
  j["status"] = status;
  j["tags"] = tags;
  if (pairing_scanned)
    j["pairing_element"] =
        pairing_element ? nlohmann::ordered_json(*pairing_element)
                        : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json CensusPairRow::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["type"] = "pair";
  j["a"] = a;
  j["b"] = b;
  j["product_degree"] = product_degree;
  j["report"] = report ? report->to_json() : nlohmann::ordered_json(nullptr);
  if (!note.empty())
    j["note"] = note;
  j["oracle"] = oracle;
  return j;
}

void run_census(const std::vector<CatalogEntry>& catalog,
                unsigned max_product_degree, const Limits& limits,
                const std::function<void(const CensusEntryRow&)>& on_entry,
                const std::function<void(const CensusPairRow&)>& on_pair) {
  if (max_product_degree < 4)
    throw Error("census budget must be at least 4");

  for (const CatalogEntry& entry : catalog) {
    CensusEntryRow row;
    row.name = entry.name;
    row.degree = entry.group.degree();
    row.order = entry.group.order();
    row.tags = entry.tag_strings();
    try {
      const GroupStatus status = group_status(entry.group, limits);
      row.status = to_string(status);
      if (status == GroupStatus::dgr_not_gr) {
        row.pairing_scanned = true;
        auto witness = has_pairing_element(entry.group, limits);
        if (witness)
          row.pairing_element = witness->cycles();
      }
    } catch (const BudgetError& e) {
      row.status = std::string("out-of-budget: ") + e.what();
    }
    on_entry(row);
  }

  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j) {
      const CatalogEntry& ea = catalog[i];
      const CatalogEntry& eb = catalog[j];
      CensusPairRow row;
      row.a = ea.name;
      row.b = eb.name;
      row.product_degree = ea.group.degree() * eb.group.degree();
      if (row.product_degree > max_product_degree) {
        row.note = "skipped: product degree exceeds the census budget of " +
                   std::to_string(max_product_degree);
        row.oracle = "skipped: not classified";
        on_pair(row);
        continue;
      }
      try {
        row.report = classify_product_gr(ea.group, eb.group, limits);
      } catch (const BudgetError& e) {
        row.note = std::string("out-of-budget: ") + e.what();
        row.oracle = "skipped: classification unavailable";
        on_pair(row);
        continue;
      }
      if (row.product_degree > limits.max_aut_vertices) {
        row.oracle = "skipped: product degree exceeds the automorphism "
                     "search limit";
      } else if (ea.group.order() * eb.group.order() >
                 limits.max_group_elements) {
        row.oracle = "skipped: product order exceeds the element cap";
      } else {
        try {
          row.oracle = cross_check(ea.group, eb.group, limits) ? "agree"
                                                               : "disagree";
        } catch (const BudgetError& e) {
          row.oracle = std::string("skipped: ") + e.what();
        }
      }
      on_pair(row);
    }
}

} // namespace ecgr
