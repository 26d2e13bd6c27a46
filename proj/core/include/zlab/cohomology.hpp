#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zlab/gf_linear.hpp"
#include "zlab/quotient.hpp"
#include "zlab/unipotent.hpp"

namespace zlab {

/// Inhomogeneous 1-cochain on a finite group with Z/p values.
struct Cochain1 {
  const GroupTable* G = nullptr;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> v;  // one residue per element

  std::uint32_t operator()(int e) const { return v[static_cast<std::size_t>(e)]; }
  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

/// Inhomogeneous 2-cochain, values indexed row-major by element pairs.
struct Cochain2 {
  const GroupTable* G = nullptr;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> v;

  std::uint32_t operator()(int s, int t) const {
    return v[static_cast<std::size_t>(s) * G->order + t];
  }
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

Cochain1 zero_cochain1(const GroupTable& G, std::uint32_t p);
Cochain2 zero_cochain2(const GroupTable& G, std::uint32_t p);

Cochain1 operator+(const Cochain1& a, const Cochain1& b);
Cochain2 operator+(const Cochain2& a, const Cochain2& b);
Cochain2 operator-(const Cochain2& a, const Cochain2& b);
Cochain2 negate(const Cochain2& a);

/// (dc)(s,t) = c(s) + c(t) - c(st).
Cochain2 d1(const Cochain1& c);

/// 1-cocycles are exactly the homomorphisms into Z/p.
bool is_cocycle1(const Cochain1& c);

/// f(t,r) + f(s,tr) == f(st,r) + f(s,t) for all triples.
bool is_cocycle2(const Cochain2& f);

/// (c cup c')(s,t) = c(s) c'(t).
Cochain2 cup(const Cochain1& c, const Cochain1& d);

/// Matrix of d1 as a |G|^2 x |G| linear operator over F_p.
PrimeFieldMatrix coboundary_operator(const GroupTable& G, std::uint32_t p);

/// Solves d1(x) = f; nullopt when f is not a coboundary.
std::optional<Cochain1> coboundary_witness(const Cochain2& f);

/// Class equality in H^2: witness x with d1(x) = f - g, when one exists.
std::optional<Cochain1> cohomologous(const Cochain2& f, const Cochain2& g);

/// Basis of Z^1 = Hom(G, Z/p).
std::vector<Cochain1> character_basis(const GroupTable& G, std::uint32_t p);

/// Echelonized span of the 2-coboundaries inside C^2.
RowBasis coboundary_basis(const GroupTable& G, std::uint32_t p);

/// Basis of the full 2-cocycle space Z^2 (vectors of length |G|^2).
std::vector<std::vector<std::uint32_t>> cocycle_basis(const GroupTable& G, std::uint32_t p);

std::size_t h2_dimension(const GroupTable& G, std::uint32_t p);

/// Triangular array of 1-cochains c_{ij}, 1 <= i <= j <= n, (i,j) != (1,n),
/// the combinatorial datum behind an n-fold Massey product.
struct DefiningSystem {
  const GroupTable* G = nullptr;
  std::uint32_t p = 0;
  int n = 0;
  std::vector<std::vector<Cochain1>> c;  // 1-based [i][j]; absent slots empty

  bool has(int i, int j) const {
    return i >= 1 && j >= i && j <= n && !(i == 1 && j == n) &&
           !c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].v.empty();
  }
  const Cochain1& at(int i, int j) const {
    return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  static DefiningSystem empty(const GroupTable& G, std::uint32_t p, int n);
};

/// tilde c_{ij}(s,t) = - sum_{r=i}^{j-1} c_{ir}(s) c_{r+1,j}(t).
Cochain2 c_tilde(const DefiningSystem& ds, int i, int j);

/// All stored entries satisfy d1(c_ij) = tilde c_ij.
bool is_defining_system(const DefiningSystem& ds);

/// The matrix side of the correspondence between triangular cochain systems
/// and punctured-unipotent maps: entry (i,j) carries (-1)^(j-i) c_{i,j-1}.
std::vector<PuncturedUnipotent> ds_to_matrix_map(const DefiningSystem& ds);
DefiningSystem matrix_map_to_ds(const std::vector<PuncturedUnipotent>& gamma_bar,
                                const GroupTable& G, std::uint32_t p);

/// Extends the given diagonal characters to a full defining system by solving
/// d1(c_ij) = tilde c_ij level by level; `randomize` adds a random character to
/// each solved entry so that repeated calls explore distinct completions.
DefiningSystem complete_defining_system(const GroupTable& G, std::uint32_t p,
                                        const std::vector<Cochain1>& diagonal,
                                        std::mt19937_64& rng, bool randomize = true);

/// The character e |-> coefficient of X_a in the series key of e.
Cochain1 generator_character(const Quotient& Q, std::uint32_t a);

/// Representative of the n-fold Massey product of the given characters on the
/// quotient, built from the explicit defining system obtained by pushing the
/// characters through an auxiliary free group into a unipotent ladder map.
/// Requires Q.level() >= chars.size() >= 2.
Cochain2 massey_representative(const Quotient& Q, const std::vector<Cochain1>& chars);

/// massey_representative on the generator characters along the letters of w.
Cochain2 psi_w(const Quotient& Q, const Word& w);

/// Independent route to the same class: the ladder map of w itself, evaluated
/// on witnesses without the auxiliary-free-group detour.
Cochain2 psi_w_direct(const Quotient& Q, const Word& w);

/// Group on Z/m x G with product twisted by the 2-cocycle f.
GroupTable central_extension(const GroupTable& G, const Cochain2& f);

/// Transgression-style pairing of sigma (of filtration level >= n) against a
/// 2-cocycle class beta on S/S_n that dies at level n+1: inflate a
/// representative to S/S_{n+1}, split it as a coboundary, and evaluate the
/// splitting cochain at sigma (normalized at the identity). Requires n >= 2.
std::uint32_t pairing_value(const GroupWord& sigma, const Cochain2& beta,
                            const Quotient& Qn, const Quotient& Qn1);

}  // namespace zlab
