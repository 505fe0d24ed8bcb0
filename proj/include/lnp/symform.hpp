#pragma once

#include "lnp/algebra.hpp"

namespace lnp {

// The associative bilinear form <x,y> = psi(x y) attached to the explicit
// path basis, where psi is 1 on the socle paths of that basis and 0 on the
// other basis paths. gram is the matrix of the form on the explicit basis;
// unit_form the same form on the engine basis.
struct SymmetrizingForm {
  Mat gram;
  Mat unit_form;
  Mat basis_mat;  // columns = explicit basis elements in engine coordinates
  Mat basis_inv;
  Vec psi;        // engine-coordinate functional
  std::vector<int32_t> socle_positions;  // socle paths inside the family

  int32_t value(const Field& f, const Vec& x, const Vec& y) const;
};

// Builds the form and verifies non-degeneracy; throws when the explicit
// family fails to contain a socle basis or the Gram matrix is singular.
SymmetrizingForm gram_form(const Algebra& a);

// Exhaustive check of psi((x y) z) == psi(x (y z)) over basis triples.
bool form_associative_check(const Algebra& a, const SymmetrizingForm& g);

bool gram_symmetric(const SymmetrizingForm& g);

struct NakayamaMap {
  Mat matrix;  // engine coordinates, columns convention
  bool is_identity() const;
};

// The representative solving <a,b> = <b,nu(a)>, i.e. G^{-1} G^T in the
// coordinates of the form's basis; verified to be an algebra automorphism
// (hard error otherwise).
NakayamaMap nakayama(const Algebra& a, const SymmetrizingForm& g);

struct TwistedCentre {
  Subspace subspace;
};

// {x : b x = x nu(b) for the trivial paths and all arrows b}
TwistedCentre twisted_centre(const Algebra& a, const NakayamaMap& nu);

}  // namespace lnp
