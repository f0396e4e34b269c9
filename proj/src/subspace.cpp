#include "xconn/subspace.hpp"

#include <algorithm>
#include <functional>

namespace xconn {

std::string_view to_string(Side side) {
  return side == Side::primal ? "primal" : "dual";
}

Subspace Subspace::span(Mat const& vectors, Side side) {
  return Subspace(row_reduce(vectors).rref, side);
}

Subspace Subspace::span(std::vector<std::vector<unsigned>> const& vectors,
                        std::size_t n,
                        unsigned p,
                        Side side) {
  return span(Mat::from_rows(vectors, p, n), side);
}

Subspace Subspace::zero(std::size_t n, unsigned p, Side side) {
  return Subspace(Mat(0, n, p), side);
}

Subspace Subspace::full(std::size_t n, unsigned p, Side side) {
  return Subspace(Mat::identity(n, p), side);
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (basis_(r, c) == 0) {
      ++c;
    }
    out.push_back(c);
  }
  return out;
}

std::optional<Mat> Subspace::coordinates(Mat const& vectors) const {
  if (vectors.cols() != ambient() || vectors.modulus() != modulus()) {
    throw Error(ErrorCode::shape_error, "vectors do not live in the ambient");
  }
  auto const piv = pivots();
  Mat coords(vectors.rows(), dim(), modulus());
  for (std::size_t r = 0; r < vectors.rows(); ++r) {
    for (std::size_t i = 0; i < piv.size(); ++i) {
      coords.set(r, i, vectors(r, piv[i]));
    }
  }
  if (coords * basis_ != vectors) {
    return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(Mat const& vectors) const {
  return coordinates(vectors).has_value();
}

bool Subspace::is_subspace_of(Subspace const& other) const {
  if (side_ != other.side_ || ambient() != other.ambient()
      || modulus() != other.modulus()) {
    return false;
  }
  return other.contains(basis_);
}

Subspace Subspace::image_under(Mat const& m) const {
  return span(basis_ * m, side_);
}

std::string Subspace::to_string() const {
  std::string out = side_ == Side::dual ? "dual(" : "(";
  out += basis_.to_string();
  out += ')';
  return out;
}

namespace {
  void same_space(Subspace const& a, Subspace const& b) {
    if (a.ambient() != b.ambient() || a.side() != b.side()) {
      throw Error(ErrorCode::shape_error, "subspaces of different spaces");
    }
    if (a.modulus() != b.modulus()) {
      throw Error(ErrorCode::modulus_mismatch, "subspaces over different fields");
    }
  }
}  // namespace

Subspace sum(Subspace const& a, Subspace const& b) {
  same_space(a, b);
  return Subspace::span(a.basis().stacked(b.basis()), a.side());
}

Subspace intersection(Subspace const& a, Subspace const& b) {
  same_space(a, b);
  // x a_basis + y b_basis = 0  <=>  (x | y) in the left kernel of [A; B].
  Mat k = left_kernel_basis(a.basis().stacked(b.basis()));
  Mat x(k.rows(), a.dim(), a.modulus());
  for (std::size_t r = 0; r < k.rows(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      x.set(r, c, k(r, c));
    }
  }
  return Subspace::span(x * a.basis(), a.side());
}

bool is_direct_sum(Subspace const& a, Subspace const& b) {
  same_space(a, b);
  return a.dim() + b.dim() == a.ambient()
         && rank(a.basis().stacked(b.basis())) == a.ambient();
}

KernelImage rref_kernel_image(Mat const& a) {
  Echelon e = row_reduce(a);
  Subspace image = Subspace::span(e.rref);
  Subspace kernel = Subspace::span(left_kernel_basis(a));
  return {std::move(e), std::move(kernel), std::move(image)};
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, unsigned p) {
  if (k > n) {
    return 0;
  }
  // prod_{i<k} (p^(n-i) - 1) / (p^(i+1) - 1), exact at every step.
  auto power = [p](std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
      r *= p;
    }
    return r;
  };
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= power(n - i) - 1;
    den *= power(i + 1) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(std::size_t n,
                                          unsigned p,
                                          SubspaceFilter filter,
                                          Side side) {
  check_modulus(p);
  if (n > kMaxAmbient) {
    throw Error(ErrorCode::too_large,
                "ambient dimension " + std::to_string(n) + " > "
                    + std::to_string(kMaxAmbient));
  }
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += gaussian_binomial(n, k, p);
  }
  if (total > kEnumerationBound) {
    throw Error(ErrorCode::too_large,
                std::to_string(total) + " subspaces exceed the bound");
  }

  std::vector<Subspace> out;
  out.reserve(total);
  for (std::size_t k = 0; k <= n; ++k) {
    if (filter == SubspaceFilter::proper && k == n) {
      continue;
    }
    if (filter == SubspaceFilter::nonzero && k == 0) {
      continue;
    }
    // Walk every pivot set, then every filling of the free slots.
    std::vector<std::size_t> piv(k);
    std::function<void(std::size_t, std::size_t)> choose
        = [&](std::size_t i, std::size_t first) {
            if (i == k) {
              std::vector<std::pair<std::size_t, std::size_t>> free;
              for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = piv[r] + 1; c < n; ++c) {
                  if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
                    free.emplace_back(r, c);
                  }
                }
              }
              std::uint64_t fillings = 1;
              for (std::size_t f = 0; f < free.size(); ++f) {
                fillings *= p;
              }
              for (std::uint64_t code = 0; code < fillings; ++code) {
                Mat b(k, n, p);
                for (std::size_t r = 0; r < k; ++r) {
                  b.set(r, piv[r], 1);
                }
                std::uint64_t rest = code;
                for (auto [r, c] : free) {
                  b.set(r, c, static_cast<unsigned>(rest % p));
                  rest /= p;
                }
                out.push_back(Subspace::span(b, side));
              }
              return;
            }
            for (std::size_t c = first; c + (k - i) <= n; ++c) {
              piv[i] = c;
              choose(i + 1, c + 1);
            }
          };
    choose(0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace canonical_complement(Subspace const& a) {
  auto const piv = a.pivots();
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t c = 0; c < a.ambient(); ++c) {
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
      std::vector<unsigned> e(a.ambient(), 0);
      e[c] = 1;
      rows.push_back(std::move(e));
    }
  }
  return Subspace::span(
      Mat::from_rows(rows, a.modulus(), a.ambient()), a.side());
}

std::vector<Subspace> all_complements(Subspace const& a) {
  std::size_t const n = a.ambient();
  std::size_t const k = a.dim();
  unsigned const p = a.modulus();
  auto const piv = a.pivots();
  std::vector<std::size_t> nonpiv;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
      nonpiv.push_back(c);
    }
  }
  // W = span{ e_j + x_j : j non-pivot, x_j in A }, one per coefficient block.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k * nonpiv.size(); ++i) {
    count *= p;
    if (count > kEnumerationBound) {
      throw Error(ErrorCode::too_large, "too many complements");
    }
  }
  std::vector<Subspace> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    Mat coeff = Mat::from_code(nonpiv.size(), k, p, code);
    Mat w = coeff * a.basis();
    for (std::size_t r = 0; r < nonpiv.size(); ++r) {
      w.set(r, nonpiv[r], add_mod(w(r, nonpiv[r]), 1, p));
    }
    out.push_back(Subspace::span(w, a.side()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace complement_within(Subspace const& inner, Subspace const& outer) {
  auto coords = outer.coordinates(inner.basis());
  if (!coords) {
    throw Error(ErrorCode::not_included,
                inner.to_string() + " is not inside " + outer.to_string());
  }
  Echelon e = row_reduce(*coords);
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    if (std::find(e.pivots.begin(), e.pivots.end(), i) == e.pivots.end()) {
      auto r = outer.basis().row(i);
      rows.emplace_back(r.begin(), r.end());
    }
  }
  return Subspace::span(
      Mat::from_rows(rows, outer.modulus(), outer.ambient()), outer.side());
}

Subspace annihilator(Subspace const& a) {
  Side const other = a.side() == Side::primal ? Side::dual : Side::primal;
  // w . b^T = 0 for every basis row b  <=>  w in left kernel of basis^T.
  return Subspace::span(left_kernel_basis(a.basis().transpose()), other);
}

Mat Morphism::images() const {
  return map * cod.basis();
}

Mat Morphism::apply(Mat const& vectors) const {
  auto coords = dom.coordinates(vectors);
  if (!coords) {
    throw Error(ErrorCode::not_included, "vector outside the domain");
  }
  return *coords * images();
}

Subspace Morphism::image() const {
  return Subspace::span(images(), cod.side());
}

Subspace Morphism::kernel() const {
  return Subspace::span(left_kernel_basis(map) * dom.basis(), dom.side());
}

bool Morphism::is_isomorphism() const {
  return dom.dim() == cod.dim() && rank(map) == dom.dim();
}

bool Morphism::is_surjective() const {
  return rank(map) == cod.dim();
}

std::string Morphism::to_string() const {
  return dom.to_string() + " -> " + cod.to_string() + " [" + map.to_string()
         + "]";
}

Morphism identity_morphism(Subspace const& a) {
  return {a, a, Mat::identity(a.dim(), a.modulus())};
}

Morphism zero_morphism(Subspace const& dom, Subspace const& cod) {
  return {dom, cod, Mat(dom.dim(), cod.dim(), dom.modulus())};
}

Morphism compose(Morphism const& f, Morphism const& g) {
  if (f.cod != g.dom) {
    throw Error(ErrorCode::shape_error,
                "cannot compose " + f.to_string() + " with " + g.to_string());
  }
  return {f.dom, g.cod, f.map * g.map};
}

Morphism restrict(Mat const& m, Subspace const& dom, Subspace const& cod) {
  auto coords = cod.coordinates(dom.basis() * m);
  if (!coords) {
    throw Error(ErrorCode::not_included,
                "image of " + dom.to_string() + " under " + m.to_string()
                    + " is not inside " + cod.to_string());
  }
  return {dom, cod, *coords};
}

Morphism inclusion(Subspace const& a, Subspace const& b) {
  if (!a.is_subspace_of(b)) {
    throw Error(ErrorCode::not_included,
                a.to_string() + " is not contained in " + b.to_string());
  }
  return restrict(Mat::identity(a.ambient(), a.modulus()), a, b);
}

Morphism projection(Subspace const& whole,
                    Subspace const& onto,
                    Subspace const& along) {
  if (onto.dim() + along.dim() != whole.dim()) {
    throw Error(ErrorCode::not_a_direct_sum,
                onto.to_string() + " + " + along.to_string() + " != "
                    + whole.to_string());
  }
  auto split = whole.coordinates(onto.basis().stacked(along.basis()));
  std::optional<Mat> to_split;
  if (split) {
    to_split = invert(*split);
  }
  if (!to_split) {
    throw Error(ErrorCode::not_a_direct_sum,
                onto.to_string() + " + " + along.to_string() + " != "
                    + whole.to_string());
  }
  // Row r of to_split gives basis row r of `whole` in the [onto; along]
  // basis; keep the `onto` part.
  Mat q(whole.dim(), onto.dim(), whole.modulus());
  for (std::size_t r = 0; r < whole.dim(); ++r) {
    for (std::size_t c = 0; c < onto.dim(); ++c) {
      q.set(r, c, (*to_split)(r, c));
    }
  }
  return {whole, onto, q};
}

Morphism retraction(Subspace const& a, Subspace const& b) {
  return projection(b, a, complement_within(a, b));
}

Mat linear_map_from_basis(Mat const& domain_basis, Mat const& images) {
  auto inv = invert(domain_basis);
  if (!inv) {
    throw Error(ErrorCode::not_invertible, "domain rows are not a basis");
  }
  return *inv * images;
}

Mat extend_to_ambient(Morphism const& f) {
  Subspace c = canonical_complement(f.dom);
  Mat images = f.images().stacked(Mat(c.dim(), f.cod.ambient(), f.cod.modulus()));
  return linear_map_from_basis(f.dom.basis().stacked(c.basis()), images);
}

std::uint64_t hom_count(Subspace const& dom, Subspace const& cod) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dom.dim() * cod.dim(); ++i) {
    count *= dom.modulus();
    if (count > kEnumerationBound) {
      throw Error(ErrorCode::too_large, "hom-set too large");
    }
  }
  return count;
}

std::vector<Morphism> all_morphisms(Subspace const& dom, Subspace const& cod) {
  std::uint64_t const count = hom_count(dom, cod);
  std::vector<Morphism> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    out.push_back(
        {dom, cod, Mat::from_code(dom.dim(), cod.dim(), dom.modulus(), code)});
  }
  return out;
}

}  // namespace xconn
