#pragma once

#include "ghc/cochain.hpp"
#include "ghc/chain_ops.hpp"
#include "ghc/eta.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ghc {

enum class CyclicityCertificate { Unverified, VerifiedOnSamples, Symmetrized };
enum class NormalizationPolicy { Require, ZeroDegenerate };

std::string to_string(CyclicityCertificate c);

/// Cyclic n-cochain on C[pi] built from a group n-cochain; evaluated on
/// (n+1)-tuples.
class CyclicCocycle {
 public:
  using Evaluator = std::function<Scalar(const Tuple&)>;

  CyclicCocycle(int arity, Cochain base, Evaluator eval, CyclicityCertificate cert, Convention conv,
                std::vector<std::string> notes = {});

  int arity() const { return arity_; }
  const Cochain& base() const { return base_; }
  CyclicityCertificate certificate() const { return cert_; }
  Convention convention() const { return conv_; }
  const std::vector<std::string>& notes() const { return notes_; }

  /// Throws DomainError unless t has arity + 1 entries.
  Scalar operator()(const Tuple& t) const;

  CyclicCocycle with_certificate(CyclicityCertificate cert, std::string note) const;

 private:
  int arity_;
  Cochain base_;
  std::shared_ptr<const Evaluator> eval_;
  CyclicityCertificate cert_;
  Convention conv_;
  std::vector<std::string> notes_;
};

/// tau_c(g_0..g_n) = c(g_1..g_n) if g_0 g_1 ... g_n = e, else 0. A cochain not
/// flagged normalized is rejected under Require and zeroed on degenerate
/// tuples under ZeroDegenerate (recorded in the notes).
CyclicCocycle extend_to_cyclic(const Group& group, const Cochain& c,
                               NormalizationPolicy policy = NormalizationPolicy::Require,
                               Convention convention = Convention::Standard);

/// (1/(n+1)) sum_k s^k tc(rot^k t), with s the tau sign of the convention.
CyclicCocycle cyclic_symmetrize(const CyclicCocycle& tc);

/// First (n+1)-tuple within the radius where tc(rot t) != s tc(t).
std::optional<Tuple> cyclicity_defect(const Group& group, const CyclicCocycle& tc, int radius,
                                      std::size_t cap = kDefaultBallCap);

/// First tuple within the radius with nonidentity product and tc != 0.
std::optional<Tuple> support_defect(const Group& group, const CyclicCocycle& tc, int radius,
                                    std::size_t cap = kDefaultBallCap);

/// Extension from the alternation, over all vertex orders, of the homogeneous
/// cochain (x_0..x_n) -> tc(x_n^-1 x_0, x_0^-1 x_1, ..., x_{n-1}^-1 x_n).
/// Alternation commutes with the coboundary, so Hochschild cocycles stay
/// cocycles, and the result is tau-invariant under the standard sign. The
/// rotation average alone does not preserve the cocycle property. Throws
/// Unsupported under the twisted convention.
CyclicCocycle alternate_extension(const Group& group, const CyclicCocycle& tc);

/// Marks tc verified if it is tau-invariant on the ball. Otherwise returns
/// the alternated extension under the standard convention and the rotation
/// average under the twisted convention.
CyclicCocycle certify_cyclic(const Group& group, const CyclicCocycle& tc, int radius,
                             std::size_t cap = kDefaultBallCap);

/// sum_i gamma_i tc(g_{0i}..g_{ni}). Throws DomainError on arity mismatch.
Scalar pair(const CyclicCocycle& tc, const Chain& x);

struct FactoringReport {
  Scalar full;
  Scalar homogeneous;
  bool equal = false;
};

/// Compares pair(tc, x) with pair(tc, homogeneous part of x).
FactoringReport homogeneous_factoring_check(const Group& group, const CyclicCocycle& tc, const Chain& x);

struct CocycleCheckReport {
  /// Whether d c = 0 on the tested range.
  bool base_is_cocycle = false;
  std::size_t samples = 0;
  std::size_t nonzero = 0;
  /// pair(tc, b(y)) per sample.
  std::vector<Scalar> defects;
  /// All defects vanish, or c is not a cocycle (then defects are reported only).
  bool passed() const { return !base_is_cocycle || nonzero == 0; }
};

CocycleCheckReport cocycle_check(const Group& group, const CyclicCocycle& tc, const std::vector<Chain>& ys,
                                 int cocycle_radius, std::size_t cap = kDefaultBallCap);

enum class ConstantSource { Fitted, Declared };
enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(ConstantSource s);
std::string to_string(Verdict v);

struct BoundCertificate {
  std::string chain_id;
  std::string cochain_id;
  EtaParams params;
  int degree = 0;
  int cover_radius = 0;
  ConstantSource source = ConstantSource::Fitted;
  /// |tau_c(x)|.
  Interval left;
  /// Constant used on the right side.
  Interval constant;
  /// max |c| lambda^{-sum L} over the covering ball.
  Interval fitted_constant;
  /// Whether the fitted constant stays below the declared one (Declared only).
  std::optional<bool> declared_consistent;
  Rational D;
  Interval eta;
  Interval right;
  Verdict verdict = Verdict::Inconclusive;
};

/// Checks |tau_c(x)| <= C D_{N,m,n} eta_{N,m}(x), with C fitted over all
/// n-tuples of total length <= cover_radius (or the declared bound of c).
/// The extension formula is applied to c as given. Throws DomainError if
/// cover_radius is below the largest tail length sum L(g_1..g_n) in x.
BoundCertificate verify_pairing_bound(const Group& group, const Cochain& c, const Chain& x, const EtaParams& params,
                                      int cover_radius, ConstantSource source = ConstantSource::Fitted,
                                      std::size_t cap = kDefaultBallCap);

}  // namespace ghc
