#include "xconn/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace xconn {

Endo::Endo(Mat m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) {
    throw Error(ErrorCode::shape_error, "endomorphism must be square");
  }
  auto ki = rref_kernel_image(matrix_);
  kernel_ = std::move(ki.kernel);
  image_ = std::move(ki.image);
}

std::vector<Mat> all_matrices(std::size_t n, unsigned p) {
  std::uint64_t const count = checked_matrix_count(n, p);
  std::vector<Mat> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    out.push_back(Mat::from_code(n, n, p, c));
  }
  return out;
}

std::vector<Mat> singular_matrices(std::size_t n, unsigned p) {
  std::vector<Mat> out;
  for (auto& m : all_matrices(n, p)) {
    if (rank(m) < n) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<Mat> invertible_matrices(std::size_t n, unsigned p) {
  std::vector<Mat> out;
  for (auto& m : all_matrices(n, p)) {
    if (rank(m) == n) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::string to_string(GreenFlags f) {
  std::string out;
  out += f.L ? "L" : "-";
  out += f.R ? "R" : "-";
  out += f.H ? "H" : "-";
  out += f.D ? "D" : "-";
  return out;
}

GreenFlags green(Endo const& a, Endo const& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus()) {
    throw Error(ErrorCode::shape_error, "endomorphisms of different spaces");
  }
  GreenFlags f;
  f.L = a.image() == b.image();
  f.R = a.kernel() == b.kernel();
  f.H = f.L && f.R;
  f.D = a.rank() == b.rank();
  return f;
}

std::vector<Endo> idempotents(std::size_t n, unsigned p, bool singular_only) {
  std::vector<Endo> out;
  for (auto& m : all_matrices(n, p)) {
    if (m * m == m) {
      Endo e(std::move(m));
      if (!singular_only || e.is_singular()) {
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

Endo idempotent_from(Subspace const& kernel, Subspace const& image) {
  if (kernel.side() != Side::primal || image.side() != Side::primal
      || !is_direct_sum(kernel, image)) {
    throw Error(ErrorCode::not_a_direct_sum,
                kernel.to_string() + " + " + image.to_string());
  }
  // Send kernel rows to 0 and image rows to themselves.
  Mat images = Mat(kernel.dim(), kernel.ambient(), kernel.modulus())
                   .stacked(image.basis());
  return Endo(linear_map_from_basis(kernel.basis().stacked(image.basis()),
                                    images));
}

SemigroupTable SemigroupTable::opposite() const {
  SemigroupTable t;
  t.labels = labels;
  t.closed = closed;
  std::size_t const n = order();
  t.entries.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.entries[a * n + b] = (*this)(b, a);
    }
  }
  return t;
}

bool SemigroupTable::is_associative() const {
  std::size_t const n = order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t const ab = (*this)(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if ((*this)(ab, c) != (*this)(a, (*this)(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

SemigroupTable matrix_table(std::vector<Mat> const& elements) {
  return make_table(
      elements,
      [](Mat const& a, Mat const& b) { return a * b; },
      [](Mat const& a) { return a.to_string(); });
}

Regularity regular_elements(SemigroupTable const& t) {
  std::size_t const n = t.order();
  Regularity r;
  r.witness.assign(n, std::nullopt);
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t(t(a, b), a) == a) {
        r.witness[a] = b;
        return;
      }
    }
  });
  for (std::size_t a = 0; a < n; ++a) {
    if (r.witness[a]) {
      r.regular.push_back(a);
    }
  }
  return r;
}

namespace {

  using Bits = std::vector<std::uint64_t>;

  Bits make_bits(std::size_t n) {
    return Bits((n + 63) / 64, 0);
  }
  void set_bit(Bits& b, std::size_t i) {
    b[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool get_bit(Bits const& b, std::size_t i) {
    return (b[i / 64] >> (i % 64)) & 1U;
  }
  std::size_t popcount(Bits const& b) {
    std::size_t c = 0;
    for (auto w : b) {
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return c;
  }

  std::vector<std::uint32_t> classes_of(std::vector<Bits> const& sets) {
    std::map<Bits, std::uint32_t> first;
    std::vector<std::uint32_t> out(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto [it, fresh] = first.emplace(sets[i], static_cast<std::uint32_t>(i));
      out[i] = it->second;
    }
    return out;
  }

  std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

}  // namespace

GreenFlags GreenStructure::flags(std::size_t a, std::size_t b) const {
  GreenFlags f;
  f.L = l_class[a] == l_class[b];
  f.R = r_class[a] == r_class[b];
  f.H = f.L && f.R;
  f.D = d_class[a] == d_class[b];
  return f;
}

GreenStructure green_structure(SemigroupTable const& t) {
  std::size_t const n = t.order();
  std::vector<Bits> left(n, make_bits(n));
  std::vector<Bits> right(n, make_bits(n));
  parallel_for(n, [&](std::size_t a) {
    set_bit(left[a], a);
    set_bit(right[a], a);
    for (std::size_t x = 0; x < n; ++x) {
      set_bit(left[a], t(x, a));
      set_bit(right[a], t(a, x));
    }
  });
  GreenStructure g;
  g.l_class = classes_of(left);
  g.r_class = classes_of(right);

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::uint32_t rep : {g.l_class[a], g.r_class[a]}) {
      std::uint32_t x = find(parent, static_cast<std::uint32_t>(a));
      std::uint32_t y = find(parent, rep);
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }
  g.d_class.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.d_class[a] = find(parent, static_cast<std::uint32_t>(a));
  }

  g.left_ideal_size.resize(n);
  g.right_ideal_size.resize(n);
  g.two_sided_ideal_size.resize(n);
  parallel_for(n, [&](std::size_t a) {
    g.left_ideal_size[a] = popcount(left[a]);
    g.right_ideal_size[a] = popcount(right[a]);
    Bits both = make_bits(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (get_bit(left[a], y)) {
        for (std::size_t w = 0; w < both.size(); ++w) {
          both[w] |= right[y][w];
        }
      }
    }
    g.two_sided_ideal_size[a] = popcount(both);
  });
  return g;
}

bool is_homomorphism(SemigroupTable const& from,
                     SemigroupTable const& to,
                     std::vector<std::uint32_t> const& map) {
  std::size_t const n = from.order();
  if (map.size() != n) {
    return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (map[from(a, b)] != to(map[a], map[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

  // Abstract invariants of an element; equal under any isomorphism.
  using Signature = std::vector<std::size_t>;

  std::vector<Signature> signatures(SemigroupTable const& t) {
    std::size_t const n = t.order();
    GreenStructure g = green_structure(t);
    std::vector<std::size_t> l_size(n, 0);
    std::vector<std::size_t> r_size(n, 0);
    std::vector<std::size_t> d_size(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      ++l_size[g.l_class[a]];
      ++r_size[g.r_class[a]];
      ++d_size[g.d_class[a]];
    }
    std::vector<Signature> out(n);
    for (std::size_t a = 0; a < n; ++a) {
      // Index and period of the monogenic subsemigroup.
      std::vector<std::uint32_t> powers{static_cast<std::uint32_t>(a)};
      std::size_t index = 0;
      std::size_t period = 0;
      while (true) {
        std::uint32_t next = t(powers.back(), a);
        auto it = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          index = static_cast<std::size_t>(it - powers.begin());
          period = powers.size() - index;
          break;
        }
        powers.push_back(next);
      }
      std::size_t left_stab = 0;
      std::size_t right_stab = 0;
      for (std::size_t x = 0; x < n; ++x) {
        left_stab += t(x, a) == a;
        right_stab += t(a, x) == a;
      }
      out[a] = {t.is_idempotent(a) ? 1U : 0U,
                g.left_ideal_size[a],
                g.right_ideal_size[a],
                g.two_sided_ideal_size[a],
                l_size[g.l_class[a]],
                r_size[g.r_class[a]],
                d_size[g.d_class[a]],
                index,
                period,
                left_stab,
                right_stab};
    }
    return out;
  }

  struct IsoSearch {
    SemigroupTable const& a;
    SemigroupTable const& b;
    std::vector<Signature> const& sig_a;
    std::vector<Signature> const& sig_b;
    std::vector<std::uint32_t> generators;

    static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

    // Extends phi over the closure of the assigned generators[0..k]; false
    // on any clash with injectivity, the operation, or signatures.
    bool close(std::vector<std::uint32_t>& phi,
               std::vector<std::uint32_t>& inv,
               std::size_t k) const {
      std::vector<std::uint32_t> queue;
      for (std::size_t x = 0; x < phi.size(); ++x) {
        if (phi[x] != kUnset) {
          queue.push_back(static_cast<std::uint32_t>(x));
        }
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t const x = queue[head];
        for (std::size_t gi = 0; gi <= k; ++gi) {
          std::uint32_t const g = generators[gi];
          std::uint32_t const y = a(x, g);
          std::uint32_t const img = b(phi[x], phi[g]);
          if (phi[y] == kUnset) {
            if (inv[img] != kUnset || sig_a[y] != sig_b[img]) {
              return false;
            }
            phi[y] = img;
            inv[img] = y;
            queue.push_back(y);
          } else if (phi[y] != img) {
            return false;
          }
        }
      }
      return true;
    }

    bool extend(std::vector<std::uint32_t>& phi,
                std::vector<std::uint32_t>& inv,
                std::size_t k) const {
      if (k == generators.size()) {
        return true;
      }
      std::uint32_t const g = generators[k];
      if (phi[g] != kUnset) {
        return extend(phi, inv, k + 1);
      }
      for (std::uint32_t c = 0; c < b.order(); ++c) {
        if (inv[c] != kUnset || sig_a[g] != sig_b[c]) {
          continue;
        }
        auto phi2 = phi;
        auto inv2 = inv;
        phi2[g] = c;
        inv2[c] = g;
        if (close(phi2, inv2, k) && extend(phi2, inv2, k + 1)) {
          phi = std::move(phi2);
          inv = std::move(inv2);
          return true;
        }
      }
      return false;
    }
  };

  // Greedy generating set, elements high in the J-order first.
  std::vector<std::uint32_t> generating_set(SemigroupTable const& t,
                                            std::vector<Signature> const& sig) {
    std::size_t const n = t.order();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      return sig[x][3] > sig[y][3];
    });
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> members;
    for (std::uint32_t cand : order) {
      if (in[cand]) {
        continue;
      }
      gens.push_back(cand);
      in[cand] = true;
      members.push_back(cand);
      for (std::size_t head = 0; head < members.size(); ++head) {
        std::uint32_t const x = members[head];
        for (std::uint32_t g : gens) {
          for (std::uint32_t y : {t(x, g), t(g, x)}) {
            if (!in[y]) {
              in[y] = true;
              members.push_back(y);
            }
          }
        }
      }
    }
    return gens;
  }

}  // namespace

std::optional<std::vector<std::uint32_t>> are_isomorphic(
    SemigroupTable const& a,
    SemigroupTable const& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  if (a.order() == 0) {
    return std::vector<std::uint32_t>{};
  }
  auto const sig_a = signatures(a);
  auto const sig_b = signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return std::nullopt;
    }
  }
  IsoSearch search{a, b, sig_a, sig_b, generating_set(a, sig_a)};
  std::vector<std::uint32_t> phi(a.order(), IsoSearch::kUnset);
  std::vector<std::uint32_t> inv(b.order(), IsoSearch::kUnset);
  if (!search.extend(phi, inv, 0)) {
    return std::nullopt;
  }
  if (std::find(phi.begin(), phi.end(), IsoSearch::kUnset) != phi.end()
      || !is_homomorphism(a, b, phi)) {
    return std::nullopt;
  }
  return phi;
}

}  // namespace xconn
