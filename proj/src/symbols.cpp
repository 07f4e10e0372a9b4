#include "wcolab/symbols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wcolab/dirichlet.hpp"

namespace wcolab {

namespace {

double parse_real(const std::string& tok, const std::string& ctx) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_symbol: bad number '" + tok + "' in " + ctx);
    }
    if (used != tok.size()) {
        throw std::invalid_argument("parse_symbol: trailing characters in '" + tok + "'");
    }
    return v;
}

// Accepts "a", "ai", "a+bi" / "a-bi" with decimal reals.
cplx parse_complex(const std::string& tok, const std::string& ctx) {
    if (tok.empty()) throw std::invalid_argument("parse_symbol: empty literal in " + ctx);
    if (tok.back() != 'i') return cplx{parse_real(tok, ctx)};
    const std::string body = tok.substr(0, tok.size() - 1);
    // split at the last sign that is not leading and not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') &&
            body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) {
        if (body.empty() || body == "+") return cplx{0.0, 1.0};
        if (body == "-") return cplx{0.0, -1.0};
        return cplx{0.0, parse_real(body, ctx)};
    }
    const std::string im = body.substr(split);
    double imv;
    if (im == "+") imv = 1.0;
    else if (im == "-") imv = -1.0;
    else imv = parse_real(im, ctx);
    return cplx{parse_real(body.substr(0, split), ctx), imv};
}

std::vector<std::string> split_params(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

bool looks_integer(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t p = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (p == tok.size()) return false;
    for (; p < tok.size(); ++p) {
        if (!std::isdigit(static_cast<unsigned char>(tok[p]))) return false;
    }
    return true;
}

}  // namespace

cplx parse_complex_literal(const std::string& text) {
    std::string stripped;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    }
    return parse_complex(stripped, "complex literal");
}

SymbolSpec parse_symbol(const std::string& text) {
    std::string stripped;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    }
    SymbolSpec spec;
    spec.text = stripped;
    const std::size_t colon = stripped.find(':');
    const std::string kind = stripped.substr(0, colon);
    std::vector<std::string> params;
    if (colon != std::string::npos) params = split_params(stripped.substr(colon + 1));
    const auto want = [&](std::size_t n) {
        if (params.size() != n) {
            throw std::invalid_argument("parse_symbol: '" + kind + "' expects " +
                                        std::to_string(n) + " parameter(s)");
        }
    };

    if (kind == "poly") {
        if (params.empty()) {
            throw std::invalid_argument("parse_symbol: poly needs coefficients");
        }
        spec.kind = SymbolKind::Poly;
        for (const std::string& p : params) {
            spec.coeffs.push_back(parse_complex(p, "poly"));
        }
    } else if (kind == "rot") {
        want(1);
        spec.kind = SymbolKind::Rot;
        if (looks_integer(params[0])) {
            spec.rot_order = std::stol(params[0]);
            if (spec.rot_order < 1) {
                throw std::invalid_argument("parse_symbol: rot order must be >= 1");
            }
            spec.theta = 1.0 / double(spec.rot_order);
        } else {
            spec.theta = parse_real(params[0], "rot");
        }
    } else if (kind == "scale") {
        want(1);
        spec.kind = SymbolKind::Scale;
        spec.scalar = parse_complex(params[0], "scale");
        if (std::abs(spec.scalar) > 1.0) {
            throw std::invalid_argument("parse_symbol: scale factor must have |t| <= 1");
        }
    } else if (kind == "logweight") {
        want(0);
        spec.kind = SymbolKind::LogWeight;
    } else if (kind == "sqrtmap") {
        want(0);
        spec.kind = SymbolKind::SqrtMap;
    } else if (kind == "sqrtweight") {
        want(0);
        spec.kind = SymbolKind::SqrtWeight;
    } else if (kind == "halfmob") {
        want(0);
        spec.kind = SymbolKind::HalfMob;
    } else if (kind == "binom") {
        want(1);
        spec.kind = SymbolKind::Binom;
        spec.alpha = parse_real(params[0], "binom");
    } else if (kind == "kernel") {
        want(1);
        spec.kind = SymbolKind::Kernel;
        spec.scalar = parse_complex(params[0], "kernel");
        if (std::abs(spec.scalar) >= 1.0) {
            throw std::invalid_argument("parse_symbol: kernel point must have |w| < 1");
        }
    } else {
        throw std::invalid_argument("parse_symbol: unknown kind '" + kind + "'");
    }
    return spec;
}

Symbol realize(const SymbolSpec& spec, std::size_t trunc) {
    switch (spec.kind) {
        case SymbolKind::Poly: {
            std::vector<cplx> c = spec.coeffs;
            if (c.size() > trunc + 1) c.resize(trunc + 1);
            return Symbol::poly(TruncatedSeries(std::move(c)));
        }
        case SymbolKind::Rot: {
            const cplx mu = std::polar(1.0, 2.0 * std::numbers::pi * spec.theta);
            Symbol s = Symbol::poly(TruncatedSeries::monomial(1, mu));
            s.closed_form = [mu](cplx z) { return mu * z; };
            return s;
        }
        case SymbolKind::Scale: {
            const cplx t = spec.scalar;
            Symbol s = Symbol::poly(TruncatedSeries::monomial(1, t));
            s.closed_form = [t](cplx z) { return t * z; };
            return s;
        }
        case SymbolKind::LogWeight:
            return Symbol{log_weight_series(trunc), {}, false};
        case SymbolKind::SqrtMap: {
            const TruncatedSeries bin = binomial_series(0.5, trunc);
            std::vector<cplx> c(trunc + 1);
            double partial = 0.0;  // sum of sqrt-series coefficients up to trunc
            c[0] = cplx{0.0};
            partial += bin.coeff(0).real();
            for (std::size_t n = 1; n <= trunc; ++n) {
                c[n] = -bin.coeff(n);
                partial += bin.coeff(n).real();
            }
            // coefficients of sqrt(1-z) sum to 0, so the absolute tail equals
            // the partial sum that remains
            Symbol s{TruncatedSeries(std::move(c), std::max(0.0, partial)), {}, false};
            s.closed_form = [](cplx z) { return 1.0 - std::sqrt(1.0 - z); };
            return s;
        }
        case SymbolKind::SqrtWeight: {
            // (1 - sqrt(1-z))^2 = 2 - z - 2 sqrt(1-z)
            const TruncatedSeries bin = binomial_series(0.5, trunc);
            std::vector<cplx> c(trunc + 1, cplx{0.0});
            double partial = 0.0;
            for (std::size_t n = 2; n <= trunc; ++n) {
                c[n] = -2.0 * bin.coeff(n);
                partial += c[n].real();
            }
            // coefficients sum to psi(1) = 1, all nonnegative
            Symbol s{TruncatedSeries(std::move(c), std::max(0.0, 1.0 - partial)),
                     {}, false};
            s.closed_form = [](cplx z) {
                const cplx t = 1.0 - std::sqrt(1.0 - z);
                return t * t;
            };
            return s;
        }
        case SymbolKind::HalfMob: {
            std::vector<cplx> c(trunc + 1, cplx{0.0});
            double p = 1.0;
            for (std::size_t k = 1; k <= trunc; ++k) {
                p *= 0.5;
                c[k] = cplx{p};
            }
            Symbol s{TruncatedSeries(std::move(c), p), {}, false};
            s.closed_form = [](cplx z) { return z / (2.0 - z); };
            return s;
        }
        case SymbolKind::Binom: {
            const double alpha = spec.alpha;
            TruncatedSeries bin = binomial_series(alpha, trunc);
            std::optional<double> tail;
            if (alpha >= 0.0 && alpha == std::floor(alpha) &&
                trunc >= std::size_t(alpha)) {
                tail = 0.0;  // exact polynomial
            } else if (alpha > 0.0 && alpha < 1.0) {
                // coefficients beyond index 0 are negative and sum to -1
                double partial = 0.0;
                for (std::size_t n = 0; n <= trunc; ++n) partial += bin.coeff(n).real();
                tail = std::max(0.0, partial);
            }
            Symbol s{TruncatedSeries(bin.coeffs(), tail), {},
                     tail.has_value() && *tail == 0.0};
            s.closed_form = [alpha](cplx z) { return std::pow(1.0 - z, alpha); };
            return s;
        }
        case SymbolKind::Kernel: {
            const cplx w = spec.scalar;
            Symbol s{kernel_series(w, trunc), {}, false};
            s.closed_form = [w](cplx z) {
                const cplx t = z * std::conj(w);
                if (std::abs(t) < 1e-30) return cplx{1.0};
                return -std::log(1.0 - t) / t;
            };
            return s;
        }
    }
    throw std::logic_error("realize: bad kind");
}

}  // namespace wcolab
