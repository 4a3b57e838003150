#pragma once

#include "ghc/algebra.hpp"

#include <map>
#include <string>

namespace ghc {

/// Sign conventions for the cyclic operator and Connes' B.
///
/// Standard: tau(a_0..a_n) = (-1)^n (a_n, a_0, ..., a_{n-1}), so tau^{n+1} = id,
/// and B = (1 - t) s N, whose unit-in-position-1 sum carries a plus sign.
///
/// Twisted: tau with sign (-1)^{n+1}, and B with a minus sign on the
/// unit-in-position-1 sum. Under this convention tau^{n+1} = (-1)^{n+1} id
/// and B o B does not vanish on unnormalized chains.
enum class Convention { Standard, Twisted };

std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

/// Hochschild boundary b: degree n -> n-1. Throws DomainError on degree 0.
Chain hochschild_b(const Group& group, const Chain& x);

/// Connes operator B: degree n -> n+1.
Chain connes_B(const Group& group, const Chain& x, Convention convention = Convention::Standard);

/// Signed cyclic rotation tau.
Chain cyclic_tau(const Chain& x, Convention convention = Convention::Standard);
/// Sign of tau on degree-n chains.
int tau_sign(int degree, Convention convention);

/// Drops every term with the identity in some position >= 1.
Chain normalize_chain(const Group& group, const Chain& x);

/// Splits x by the conjugacy class of the tuple product g_0 g_1 ... g_n.
std::map<Element, Chain> conjugacy_split(const Group& group, const Chain& x);

/// The summand of x indexed by the class of the identity.
Chain homogeneous_part(const Group& group, const Chain& x);

}  // namespace ghc
