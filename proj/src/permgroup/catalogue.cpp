#include "vdw/permgroup/catalogue.hpp"

#include <regex>
#include <unordered_set>

#include "json.hpp"
#include "vdw/core/error.hpp"
#include "vdw/permgroup/product_action.hpp"

namespace vdw::perm {

namespace {

std::vector<Letter> iota_cycle(unsigned from, unsigned to) {
  std::vector<Letter> c;
  for (unsigned i = from; i <= to; ++i) c.push_back(i);
  return c;
}

unsigned primitive_root(unsigned p) {
  for (unsigned g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : factor_integer(BigInt(p - 1))) {
      if (pow_mod(g, (p - 1) / q.get_ui(), p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

}  // namespace

PermGroup symmetric_group(unsigned n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "S_n needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
  if (n >= 3) gens.push_back(Permutation::from_cycles(n, {iota_cycle(1, n)}));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(unsigned n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "A_n needs n >= 1");
  std::vector<Permutation> gens;
  for (unsigned i = 3; i <= n; ++i) gens.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(unsigned n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "C_n needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {iota_cycle(1, n)}));
  return PermGroup(n, std::move(gens));
}

PermGroup dihedral_group(unsigned n) {
  require(n >= 3, ErrorCode::kInvalidArgument, "D_n needs n >= 3");
  std::vector<Letter> reflection(n);
  for (unsigned i = 0; i < n; ++i) reflection[i] = (n - i) % n;
  return PermGroup(n, {Permutation::from_cycles(n, {iota_cycle(1, n)}), Permutation(reflection)});
}

PermGroup affine_group(unsigned p) {
  require(is_prime(p), ErrorCode::kNotPrime, "AGL(1,p) needs p prime");
  std::vector<Letter> scale(p);
  unsigned g = primitive_root(p);
  for (unsigned i = 0; i < p; ++i) scale[i] = static_cast<Letter>((static_cast<std::uint64_t>(i) * g) % p);
  std::vector<Permutation> gens{Permutation::from_cycles(p, {iota_cycle(1, p)})};
  if (p > 2) gens.emplace_back(scale);
  return PermGroup(p, std::move(gens));
}

void self_check_mathieu11(const PermGroup& g) {
  require(g.degree() == 11, ErrorCode::kInvariantViolation, "M11 degree");
  const auto& all = g.elements();
  require(all.size() == 7920, ErrorCode::kInvariantViolation,
          "M11 closure has " + std::to_string(all.size()) + " elements, expected 7920");
  require(g.is_transitive(), ErrorCode::kInvariantViolation, "M11 not transitive");
  std::unordered_set<std::uint32_t> tuples;
  for (const auto& h : all) tuples.insert(h(0) | h(1) << 8 | h(2) << 16 | h(3) << 24);
  require(tuples.size() == 11 * 10 * 9 * 8, ErrorCode::kInvariantViolation, "M11 is not 4-transitive");
}

const PermGroup& mathieu11() {
  static const PermGroup group = [] {
    PermGroup g(11, {Permutation::from_cycles(11, {iota_cycle(1, 11)}),
                     Permutation::from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
    self_check_mathieu11(g);
    return g;
  }();
  return group;
}

std::vector<CatalogueEntry> catalogue() {
  std::vector<CatalogueEntry> out;
  for (unsigned n = 2; n <= 9; ++n) out.push_back({"S" + std::to_string(n), symmetric_group(n), factorial(n)});
  for (unsigned n = 3; n <= 9; ++n)
    out.push_back({"A" + std::to_string(n), alternating_group(n), factorial(n) / 2});
  for (unsigned p : primes_up_to(29)) {
    out.push_back({"C" + std::to_string(p), cyclic_group(p), BigInt(p)});
    if (p >= 3) out.push_back({"D" + std::to_string(p), dihedral_group(p), BigInt(2 * p)});
    if (p >= 5) out.push_back({"AGL" + std::to_string(p), affine_group(p), BigInt(p * (p - 1))});
  }
  for (unsigned m = 3; m <= 30; ++m) {
    for (unsigned k = 1; 2 * k < m; ++k) {
      for (unsigned r = 1; r <= 5; ++r) {
        ProductActionSpec spec{m, k, r};
        if (!spec.non_elemental()) continue;
        BigInt degree = ipow(binomial(m, k), r);
        if (degree > 30) continue;
        out.push_back({"PA(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(r) + ")",
                       wreath_product_action(spec), ipow(factorial(m), r) * factorial(r)});
      }
    }
  }
  for (auto [m, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4}, {3, 3}, {5, 2}, {2, 5}}) {
    out.push_back({"Wr(" + std::to_string(m) + "," + std::to_string(r) + ")", imprimitive_wreath_action(m, r),
                   ipow(factorial(m), r) * factorial(r)});
  }
  out.push_back({"M11", mathieu11(), BigInt(7920)});
  return out;
}

CatalogueEntry group_by_name(const std::string& name) {
  std::smatch mt;
  auto num = [&](int i) { return static_cast<unsigned>(std::stoul(mt[i].str())); };
  if (name == "M11") return {"M11", mathieu11(), BigInt(7920)};
  if (std::regex_match(name, mt, std::regex(R"(S(\d+))"))) return {name, symmetric_group(num(1)), factorial(num(1))};
  if (std::regex_match(name, mt, std::regex(R"(A(\d+))"))) {
    require(num(1) >= 2, ErrorCode::kUnknownGroup, name);
    return {name, alternating_group(num(1)), factorial(num(1)) / 2};
  }
  if (std::regex_match(name, mt, std::regex(R"(C(\d+))"))) return {name, cyclic_group(num(1)), BigInt(num(1))};
  if (std::regex_match(name, mt, std::regex(R"(D(\d+))"))) return {name, dihedral_group(num(1)), BigInt(2 * num(1))};
  if (std::regex_match(name, mt, std::regex(R"(AGL(\d+)|AGL\(1,(\d+)\))"))) {
    unsigned p = mt[1].matched ? num(1) : num(2);
    return {"AGL" + std::to_string(p), affine_group(p), BigInt(p) * (p - 1)};
  }
  if (std::regex_match(name, mt, std::regex(R"(PA\((\d+),(\d+),(\d+)\))"))) {
    ProductActionSpec spec{num(1), num(2), num(3)};
    return {name, wreath_product_action(spec), ipow(factorial(spec.m), spec.r) * factorial(spec.r)};
  }
  if (std::regex_match(name, mt, std::regex(R"(Wr\((\d+),(\d+)\))"))) {
    return {name, imprimitive_wreath_action(num(1), num(2)), ipow(factorial(num(1)), num(2)) * factorial(num(2))};
  }
  fail(ErrorCode::kUnknownGroup, "unknown group name '" + name + "'");
}

GroupSummary summarize(const std::string& name, const PermGroup& group, std::size_t cap) {
  GroupSummary s;
  s.name = name;
  s.degree = group.degree();
  s.order = group.order(cap);
  s.transitive = group.is_transitive();
  s.primitive = s.transitive && group.is_primitive();
  if (s.order > 1) {
    s.ind = group.ind(cap);
    s.min_moved = group.min_moved_points(cap);
  }
  return s;
}

std::string to_json_line(const GroupSummary& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["degree"] = s.degree;
  j["order"] = s.order;
  j["transitive"] = s.transitive;
  j["primitive"] = s.primitive;
  if (s.order > 1) {
    j["ind"] = s.ind;
    j["min_moved"] = s.min_moved;
  } else {
    j["ind"] = nullptr;
    j["min_moved"] = nullptr;
  }
  return j.dump();
}

}  // namespace vdw::perm
