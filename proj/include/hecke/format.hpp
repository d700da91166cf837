#pragma once

#include <string>

#include "hecke/algebra.hpp"
#include "hecke/ext_weyl.hpp"

namespace hecke {

/// Canonical element literal:
///   "1"                       identity
///   "(c1,...,cn;t1,...,tk)"   translation
///   "s1.s0"                   word in the affine generators
///   "(...;...)|word"          translation times word
std::string render_ext(const GroupContext& g, const ExtElt& w);

/// Parse the literal grammar above; words use delta_aff names ("s" is an
/// alias for "s1").  Throws DomainError("BadElementLiteral") on junk.
ExtElt parse_ext(const GroupContext& g, const std::string& text);

/// Translation-part literal "(free;tors)"; used for theta/center arguments.
LamElt parse_lattice(const GroupContext& g, const std::string& text);
std::string render_lattice(const GroupContext& g, const LamElt& l);

/// Deterministic rendering of an algebra element.  Terms are sorted by
/// (stabilizer-component literal, length, reduced word); `normalized`
/// rescales the basis symbols to Tn_w = v^{-L(w)} T_w.
std::string render_hecke(const Algebra& a, const HeckeElt& h,
                         bool normalized = false);

std::string render_bernstein(const Algebra& a, const BernsteinForm& b);

}  // namespace hecke
