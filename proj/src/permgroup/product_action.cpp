#include "vdw/permgroup/product_action.hpp"

#include <unordered_map>

#include "vdw/core/error.hpp"
#include "vdw/core/numtheory.hpp"

namespace vdw::perm {

namespace {

void validate(const ProductActionSpec& spec) {
  require(spec.m >= 3, ErrorCode::kInvalidArgument, "product action needs m >= 3");
  require(spec.k >= 1 && 2 * spec.k < spec.m, ErrorCode::kInvalidArgument, "product action needs 1 <= k < m/2");
  require(spec.r >= 1, ErrorCode::kInvalidArgument, "product action needs r >= 1");
  require(spec.m <= 63, ErrorCode::kDegreeTooLarge, "m beyond 63");
}

std::uint64_t image_of_subset(const Permutation& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (unsigned i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out |= std::uint64_t{1} << g(i);
  }
  return out;
}

std::vector<Permutation> symmetric_generators(unsigned m) {
  std::vector<Permutation> gens;
  if (m < 2) return gens;
  gens.push_back(Permutation::from_cycles(m, {{1, 2}}));
  if (m > 2) {
    std::vector<Letter> cycle(m);
    for (unsigned i = 0; i < m; ++i) cycle[i] = i + 1;
    gens.push_back(Permutation::from_cycles(m, {cycle}));
  }
  return gens;
}

std::vector<WreathElement> wreath_generators(unsigned m, unsigned r) {
  std::vector<WreathElement> gens;
  Permutation id_m(m), id_r(r);
  for (const auto& s : symmetric_generators(m)) {
    WreathElement e{std::vector<Permutation>(r, id_m), id_r};
    e.base[0] = s;
    gens.push_back(std::move(e));
  }
  for (const auto& h : symmetric_generators(r)) {
    gens.push_back(WreathElement{std::vector<Permutation>(r, id_m), h});
  }
  return gens;
}

}  // namespace

std::size_t ProductActionSpec::degree() const {
  validate(*this);
  BigInt d = ipow(binomial(m, k), r);
  require(d.fits_ulong_p(), ErrorCode::kDegreeTooLarge, "product action degree overflows");
  return d.get_ui();
}

bool WreathElement::is_identity() const {
  if (!top.is_identity()) return false;
  for (const auto& g : base) {
    if (!g.is_identity()) return false;
  }
  return true;
}

std::vector<std::uint64_t> ksubsets_lex(unsigned m, unsigned k) {
  std::vector<std::uint64_t> out;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return out;
  while (true) {
    std::uint64_t mask = 0;
    for (unsigned v : idx) mask |= std::uint64_t{1} << v;
    out.push_back(mask);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == m - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Permutation product_action_image(const ProductActionSpec& spec, const WreathElement& element) {
  std::size_t n = spec.degree();
  require(element.base.size() == spec.r && element.top.degree() == spec.r, ErrorCode::kInvalidArgument,
          "wreath element shape mismatch");
  for (const auto& g : element.base) {
    require(g.degree() == spec.m, ErrorCode::kInvalidArgument, "base permutation degree mismatch");
  }
  auto subsets = ksubsets_lex(spec.m, spec.k);
  std::unordered_map<std::uint64_t, std::size_t> rank;
  for (std::size_t i = 0; i < subsets.size(); ++i) rank[subsets[i]] = i;
  const std::size_t c = subsets.size();
  // image rank of subset s under g_i, per coordinate
  std::vector<std::vector<std::size_t>> coord_image(spec.r, std::vector<std::size_t>(c));
  for (unsigned i = 0; i < spec.r; ++i) {
    for (std::size_t s = 0; s < c; ++s) coord_image[i][s] = rank.at(image_of_subset(element.base[i], subsets[s]));
  }
  std::vector<std::size_t> weight(spec.r);  // row-major: coordinate 0 most significant
  for (unsigned i = 0; i < spec.r; ++i) {
    std::size_t w = 1;
    for (unsigned j = i + 1; j < spec.r; ++j) w *= c;
    weight[i] = w;
  }
  std::vector<Letter> images(n);
  std::vector<std::size_t> digits(spec.r);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (unsigned i = 0; i < spec.r; ++i) {
      digits[i] = rest / weight[i];
      rest %= weight[i];
    }
    std::size_t y = 0;
    for (unsigned i = 0; i < spec.r; ++i) y += coord_image[i][digits[i]] * weight[element.top(i)];
    images[x] = static_cast<Letter>(y);
  }
  return Permutation(std::move(images));
}

Permutation imprimitive_action_image(unsigned m, unsigned r, const WreathElement& element) {
  require(element.base.size() == r && element.top.degree() == r, ErrorCode::kInvalidArgument,
          "wreath element shape mismatch");
  std::vector<Letter> images(static_cast<std::size_t>(m) * r);
  for (unsigned b = 0; b < r; ++b) {
    require(element.base[b].degree() == m, ErrorCode::kInvalidArgument, "base permutation degree mismatch");
    for (unsigned j = 0; j < m; ++j) images[b * m + j] = element.top(b) * m + element.base[b](j);
  }
  return Permutation(std::move(images));
}

PermGroup wreath_product_action(const ProductActionSpec& spec, std::size_t degree_cap) {
  validate(spec);
  BigInt d = ipow(binomial(spec.m, spec.k), spec.r);
  require(d <= BigInt(static_cast<unsigned long>(degree_cap)), ErrorCode::kDegreeTooLarge,
          "C(m,k)^r = " + d.get_str() + " exceeds degree cap");
  std::vector<Permutation> gens;
  for (const auto& e : wreath_generators(spec.m, spec.r)) gens.push_back(product_action_image(spec, e));
  return PermGroup(spec.degree(), std::move(gens));
}

PermGroup imprimitive_wreath_action(unsigned m, unsigned r) {
  require(m >= 2 && r >= 1, ErrorCode::kInvalidArgument, "imprimitive wreath needs m >= 2, r >= 1");
  std::vector<Permutation> gens;
  for (const auto& e : wreath_generators(m, r)) gens.push_back(imprimitive_action_image(m, r, e));
  return PermGroup(static_cast<std::size_t>(m) * r, std::move(gens));
}

std::pair<std::size_t, std::size_t> blow_down_index_ratio(const ProductActionSpec& spec,
                                                          const WreathElement& element) {
  require(!element.is_identity(), ErrorCode::kIdentityElement, "blow-down ratio of the identity");
  return {product_action_image(spec, element).ind(), imprimitive_action_image(spec.m, spec.r, element).ind()};
}

std::size_t count_moved_ksubsets(const Permutation& sigma, unsigned k) {
  unsigned m = static_cast<unsigned>(sigma.degree());
  require(k >= 1 && 2 * k < m, ErrorCode::kInvalidArgument, "count_moved_ksubsets needs 1 <= k < m/2");
  require(m <= 63, ErrorCode::kDegreeTooLarge, "m beyond 63");
  std::size_t moved = 0;
  for (std::uint64_t s : ksubsets_lex(m, k)) moved += image_of_subset(sigma, s) != s;
  return moved;
}

}  // namespace vdw::perm
