#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wcolab/series.hpp"

namespace wcolab {

// An analytic symbol: its truncated series plus, for the non-polynomial
// builtins, a closed-form evaluator.  Series evaluation cannot reach the
// radii 1 - 10^{-j} the compactness probes need, so diagnostics prefer the
// closed form when it is available.
struct Symbol {
    TruncatedSeries series = TruncatedSeries::zero();
    std::function<cplx(cplx)> closed_form;  // empty for plain polynomials
    bool polynomial = true;                 // series is exact (no tail)

    cplx eval(cplx z) const {
        return closed_form ? closed_form(z) : evaluate(series, z);
    }
    static Symbol poly(TruncatedSeries s) { return Symbol{std::move(s), {}, true}; }
};

enum class SymbolKind {
    Poly,        // explicit coefficient list
    Rot,         // e^{2 pi i / r} z (integer r) or e^{2 pi i theta} z (real theta)
    Scale,       // t z, |t| <= 1
    LogWeight,   // sum_{k>=2} z^k / (k log k)
    SqrtMap,     // 1 - sqrt(1-z)
    SqrtWeight,  // (1 - sqrt(1-z))^2
    HalfMob,     // z / (2 - z)
    Binom,       // (1-z)^alpha
    Kernel,      // truncated reproducing kernel k_w
};

struct SymbolSpec {
    SymbolKind kind = SymbolKind::Poly;
    std::vector<cplx> coeffs;  // Poly
    long rot_order = 0;        // Rot with integer parameter; 0 when theta form
    double theta = 0.0;        // Rot with real parameter
    cplx scalar;               // Scale t / Kernel w
    double alpha = 0.0;        // Binom
    std::string text;          // original spec text, for reports
};

// Grammar: kind[:param{,param}]; complex literals "a", "ai", "a+bi".
SymbolSpec parse_symbol(const std::string& text);

// The same complex-literal grammar, standalone.
cplx parse_complex_literal(const std::string& text);

Symbol realize(const SymbolSpec& spec, std::size_t trunc);

}  // namespace wcolab
