#pragma once

#include "liouville/coefficients.hpp"
#include "liouville/jet.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lv {

enum class IdentityId {
    LaplacianWeight,     // v^(alpha-1) g^(gamma+2) Delta v through D1
    SquareExpansion,     // w (Delta v)^2 through A, DE, D1 and the G_ij
    TracelessSum,        // sum E_ij^2 in terms of the G_ij
    EquationSquare,      // -(1 + gamma S) w (Delta v)^2 on solutions
    Master,              // the combined pointwise identity on solutions
    MultipliedN,         // N v^p times the equation, integrated by parts
    MultipliedM,         // M g^q times the equation
    MultipliedGradient,  // v^(-1) g^2 times the equation
    KDecomposition,      // master identity with multipliers and the completed square
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::LaplacianWeight,   IdentityId::SquareExpansion, IdentityId::TracelessSum,
    IdentityId::EquationSquare,    IdentityId::Master,          IdentityId::MultipliedN,
    IdentityId::MultipliedM,       IdentityId::MultipliedGradient, IdentityId::KDecomposition,
};

const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);
// True when the identity only holds on jets of solutions.
bool identity_needs_pde(IdentityId id);

// Which power of v multiplies the (1 + gamma) G_11^2 term: v^alpha is the
// consistent reading, v^gamma the alternative a typo would suggest.
enum class BaseReading { VAlpha, VGamma };
// How the a1 / a2 sums split the G_ij^2: by rows (i >= 2 with all j, then row 1)
// or literally as a1 over i + j > 2 plus a2 over the whole first row.
enum class SplitReading { Rows, Literal };

enum class FrameKind { GammaZero, GammaShift };
const char* frame_kind_name(FrameKind k);

struct LabSetup {
    ProblemParams prob;
    FrameKind kind = FrameKind::GammaZero;
    Rational gamma, alpha, eps;
    QuadExt S;
    Rational P, T, U;   // multipliers for the K-decomposition
};

// Critical p and q, M = N = 1, eps = 1/1000, P = 1/100, T = 1/10, U = 1/5.
// GammaZero: gamma = 0, S = 1/n, alpha = -2(p - P)/(n + 2).
// GammaShift: gamma = n - 4 (3 when n < 7), S the root with b2 = 0 at eps = 0, alpha = -gamma - 4/n.
LabSetup default_setup(int n, FrameKind kind);
// Setup where every quantity is rational: p = 2, M = 0, integer alpha, even gamma,
// S rational (1/n, or a rational point near the frame root).
LabSetup exact_setup(int n, FrameKind kind);

struct ResidualOptions {
    BaseReading base = BaseReading::VAlpha;
    SplitReading split = SplitReading::Rows;
};

struct IdentityValue {
    double lhs = 0, rhs = 0;
    double residual = 0;   // |lhs - rhs| / (1 + |lhs| + |rhs|)
};

template <class T>
struct Residual {
    T lhs, rhs;
    T residual;
};

// Evaluates one identity on a jet. `bundle` replaces the chain-rule divergences
// (for checking against an independent differentiation).
template <class T>
Residual<T> evaluate_identity(IdentityId id, const Jet3<T>& jet, const LabSetup& setup, const ResidualOptions& opt = {},
                              const std::optional<DivergenceBundle<T>>& bundle = std::nullopt);

// Pointwise invariants: traces of E and G vanish, and the Cauchy-Schwarz bound
// (n-1) sum_{i>1} G_ii^2 >= G_11^2. Returns the worst violation (<= 0 when fine for
// the inequality, the absolute trace for the equalities).
template <class T>
struct InvariantValues {
    T trace_E, trace_G;
    T cauchy_schwarz_gap;   // (n-1) sum_{i>1} G_ii^2 - G_11^2
};
template <class T>
InvariantValues<T> invariants(const Jet3<T>& jet, const LabSetup& setup);

// Signed terms of the master identity (the first is -W), used for the scaling check.
template <class T>
std::vector<T> master_terms(const Jet3<T>& jet, const LabSetup& setup);

enum class LabPrecision { Double, Extended, Exact };
const char* lab_precision_name(LabPrecision p);
double lab_tolerance(LabPrecision p);   // 1e-9, 1e-25, 0

struct IdentityStat {
    IdentityId id;
    int n = 0;
    FrameKind frame = FrameKind::GammaZero;
    long count = 0;
    double max_residual = 0;
    bool pass = false;
};

struct LabConfig {
    long trials = 1000;   // total jets, split evenly over dims x frames
    std::uint64_t seed = 42;
    std::vector<int> dims{3, 5, 7, 10};
    std::vector<FrameKind> frames{FrameKind::GammaZero, FrameKind::GammaShift};
    LabPrecision precision = LabPrecision::Double;
    int threads = 1;
};

struct LabResult {
    LabConfig config;
    double tolerance = 0;
    std::vector<IdentityStat> stats;
    bool identities_pass = false;
    long invariant_failures = 0;
    double worst_trace = 0;
    double worst_cauchy_schwarz = 0;   // most negative gap seen (0 if none)
    // Reading disambiguation on the master identity.
    double valpha_max = 0, vgamma_max = 0;
    double rows_max = 0, literal_max = 0;
    std::string base_reading;    // "v^alpha", "v^gamma", "ambiguous"
    std::string split_reading;   // "rows", "literal", "ambiguous"
    // Free jets fed to the master identity must fail.
    double negative_min = 0, negative_max = 0;
    bool negative_control_fails = false;
    // Master-identity terms under v -> k^a v(k x) at critical q.
    double scaling_max_deviation = 0;
    bool scaling_signs_preserved = false;
    double seconds = 0;
    bool pass = false;
};

LabResult run_identity_lab(const LabConfig& config);

struct ScalingResult {
    double k = 1;
    double exponent = 0;        // common power of k
    double max_deviation = 0;   // max |term_k / (k^E term) - 1|
    bool signs_preserved = false;
};
// Rescales a solution jet by k and compares the master-identity terms. `q_shift`
// perturbs q away from critical after the jet is drawn.
ScalingResult scaling_check(int n, FrameKind kind, double k, std::uint64_t seed, const Rational& q_shift = Rational(0));

} // namespace lv
