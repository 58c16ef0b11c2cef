#pragma once

#include "supergeo/geometry/geometry.hpp"
#include "supergeo/parse/scenario.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace supergeo {

// Identifiers for the closed-form statements the verifier checks: the
// four connection cases, six curvature cases, four Ricci cases, six
// W2-building-block cases, and the two warped-product equivalences.
// "T4.3" is accepted as an alias for C4.4 (same equivalence).
enum class ClaimId {
    L311, L312, L313, L314,
    P321, P322, P323, P324, P325, P326,
    P331, P332, P333, P334,
    T341, T342, T343, T344, T345, T346,
    T42, C44,
};

enum class ClaimTier { MustPass, Report };

const std::vector<ClaimId>& allClaims();
std::string claimName(ClaimId id);
std::optional<ClaimId> parseClaimId(const std::string& name);
ClaimTier claimTier(ClaimId id);

// Which factor (1 or 2) each frame argument of a claim's formula is
// drawn from; empty for the equivalence claims T4.2 / C4.4, which take
// no frame arguments.
const std::vector<int>& claimSignature(ClaimId id);

// One factor of a twisted product: coordinate names, the product-chart
// frames it owns (evens then odds, in declaration order), and its
// intrinsic metric over those frames.
struct FactorBlock {
    std::vector<std::string> evenNames;
    std::vector<std::string> oddNames;
    std::vector<int> frames;
    std::vector<int> evenVars;
    Metric metric;

    int evenCount() const { return static_cast<int>(evenNames.size()); }
    int oddCount() const { return static_cast<int>(oddNames.size()); }
    int gradedDimension() const { return evenCount() - oddCount(); }
};

// A validated twisted-product configuration built from a scenario
// document: the shared variable table and product chart, both factor
// blocks, the twist h, and the scenario's claim selection (empty means
// all claims).
struct TwistedProductSpec {
    std::shared_ptr<VariableTable> vars;
    std::shared_ptr<Chart> chart;
    FactorBlock m1, m2;
    SuperScalar twist;
    std::vector<ClaimId> claimSelection;
    std::string name;

    static TwistedProductSpec build(const ScenarioDocument& doc);
    static TwistedProductSpec loadFile(const std::string& path);
};

// The product metric g1 ⊕ h²·g2 over the full product chart (mixed
// blocks zero).
Metric buildTwistedMetric(const TwistedProductSpec& spec);

// A claim value: vector-valued for connection/curvature/K statements,
// scalar-valued for Ricci statements.
struct ClaimValue {
    bool vectorValued = true;
    VectorField vec;
    SuperScalar scal;

    static ClaimValue vector(VectorField v);
    static ClaimValue scalar(SuperScalar s);
    bool isZero() const;
    ClaimValue operator-(const ClaimValue& o) const;
    std::string render() const;
};

struct CaseResult {
    std::vector<int> frames;
    std::string residual;
    bool pass = true;
};

struct ClaimResult {
    ClaimId id = ClaimId::L311;
    ClaimTier tier = ClaimTier::MustPass;
    std::vector<CaseResult> cases;
    bool pass = true;
    std::string note;  // set for not-applicable claims and equivalence verdicts
};

struct VerificationReport {
    std::string scenario;
    std::vector<ClaimResult> claims;
    int passed = 0;    // claims whose pass flag is set
    int failed = 0;    // failing MUST-PASS claims
    int reported = 0;  // failing REPORT claims (residuals are data, not errors)
    bool mustPassOk() const { return failed == 0; }
    bool allOk() const { return failed == 0 && reported == 0; }
};

struct MixedRicciResidual {
    int frameX = 0;  // factor-1 frame
    int frameV = 0;  // factor-2 frame
    SuperScalar direct;     // Ric(X,V) on the product metric
    SuperScalar prefactor;  // -(q-m2-1)(-1)^{|X||V|}
};

struct WarpedFactorization {
    bool separable = false;
    bool hasFactors = false;  // explicit factors extracted
    std::string factor1;      // rendered twist factor over M1
    std::string factor2;      // rendered twist factor over M2
    std::string certificate;  // criterion summary
};

struct W2FlatReport {
    bool applicable = false;   // m - n - 1 != 0
    bool xyqAllZero = true;    // K(X,Y)Q components, X,Y in M1, Q in M2
    bool uvxAllZero = true;    // K(U,V)X components, U,V in M2, X in M1
    bool separable = false;
    bool informative = false;  // frame configuration can witness non-separability
    bool equivalenceHolds = true;
    std::vector<CaseResult> cases;
    std::string note;
};

// The geometry bundle of one twisted product: the product geometry and
// both factor geometries over the shared chart, plus the twist and the
// helper quantities the closed forms are written in.
class ProductContext {
public:
    explicit ProductContext(TwistedProductSpec spec);

    const TwistedProductSpec& spec() const { return spec_; }
    const Chart& chart() const { return *spec_.chart; }
    const Geometry& product() const { return *product_; }
    const Geometry& factor1() const { return *factor1_; }
    const Geometry& factor2() const { return *factor2_; }

    const SuperScalar& h() const { return spec_.twist; }
    const SuperScalar& hInverse() const { return hInv_; }

    int n1() const { return spec_.m1.gradedDimension(); }
    int n2() const { return spec_.m2.gradedDimension(); }
    int productDimension() const { return n1() + n2(); }  // m - n
    int qMinusM2() const { return n2(); }

    VectorField unit(int fid) const;
    // d_fid(h) / h.
    SuperScalar lnhDerivative(int fid) const;
    // d_second( d_first(h) / h ).
    SuperScalar lnhSecond(int fidFirst, int fidSecond) const;

    // The statement side of a claim on one frame tuple.  Throws
    // UndefinedDenominatorError when the statement divides by a vanishing
    // dimension combination, and Error on equivalence claims (which have
    // no per-tuple formula).
    ClaimValue closedForm(ClaimId claim, const std::vector<int>& frames) const;
    // The same quantity from first principles on the product metric.
    ClaimValue directValue(ClaimId claim, const std::vector<int>& frames) const;

private:
    TwistedProductSpec spec_;
    SuperScalar hInv_;
    std::unique_ptr<Geometry> product_;
    std::unique_ptr<Geometry> factor1_;
    std::unique_ptr<Geometry> factor2_;
};

// Direct mixed Ricci components Ric(X,V) over all factor-1 x factor-2
// frame pairs, each paired with the statement prefactor.
std::vector<MixedRicciResidual> mixedRicciFlatResiduals(const ProductContext& ctx);

// Jet-criterion separability test h·d_J(d_I h) - (d_I h)(d_J h) = 0 over
// all mixed frame pairs, with explicit factor extraction when the twist
// is a declared product of single-factor pieces.
WarpedFactorization warpedFactorization(const ProductContext& ctx);

// Direct K-tensor components on the two mixed signatures (X,Y)Q and
// (U,V)X, and the verdict on the equivalence "all components zero iff
// the twist is separable" for this scenario's frame configuration.
W2FlatReport w2FlatCheck(const ProductContext& ctx);

// Verifies the selected claims (empty selection means all) and returns
// the deterministic report: claims in canonical order, frame tuples in
// lexicographic frame order.
VerificationReport verifyClaims(const ProductContext& ctx, std::vector<ClaimId> claims);

}  // namespace supergeo
