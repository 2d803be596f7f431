#include "ttw/catalog.hpp"

#include <functional>
#include <mutex>
#include <unordered_map>

#include "catalog_data.hpp"
#include "ttw/expr.hpp"

namespace ttw::catalog {

namespace {

void require_k(unsigned k, unsigned lo, unsigned hi, const char* what) {
    if (k < lo || k > hi)
        throw Error(std::string("no catalog ") + what + " for k=" + std::to_string(k));
}

ParamPoly var(Var v) { return ParamPoly::variable(v); }

DiffOp from_table(const detail::CoeffEntry* table, std::size_t size) {
    DiffOp op;
    for (std::size_t i = 0; i < size; ++i)
        op.add_term(parse_poly(table[i].expr), table[i].dt, table[i].du);
    return op;
}

GenPolynomial from_table(const detail::GenTermEntry* table, std::size_t size) {
    GenPolynomial g;
    for (std::size_t i = 0; i < size; ++i)
        g.add(gen_mono(table[i].n, table[i].m, table[i].p, table[i].q),
              parse_poly(table[i].coeff));
    return g;
}

// Parsing the k=3/k=4 tables costs a few hundred milliseconds; cache the
// symbolic operators and specialize per call. The lock is not held while
// building: builders recurse into other cached entries.
const DiffOp& cached_op(const char* key, const std::function<DiffOp()>& build) {
    static std::unordered_map<std::string, DiffOp> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    DiffOp op = build();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(op)).first->second;
}

DiffOp bind(const DiffOp& op, const ModelParams& params) {
    auto bindings = params.bindings();
    return bindings.empty() ? op : op.eval_params(bindings);
}

}  // namespace

std::map<Var, Rat> ModelParams::bindings() const {
    std::map<Var, Rat> out;
    if (a) out.emplace(Var::A, *a);
    if (b) out.emplace(Var::B, *b);
    if (w) out.emplace(Var::W, *w);
    return out;
}

ParamPoly ModelParams::alpha() const {
    ParamPoly av = a ? ParamPoly(*a) : ParamPoly::variable(Var::A);
    return av * av - av;
}

ParamPoly ModelParams::beta() const {
    ParamPoly bv = b ? ParamPoly(*b) : ParamPoly::variable(Var::B);
    return bv * bv - bv;
}

DiffOp hamiltonian(const ModelParams& params) {
    if (params.k < 1) throw Error("hamiltonian requires k >= 1");
    long k = params.k;
    DiffOp h;
    h.add_term(poly_mono(Rat(-4), 1), 2, 0);
    h.add_term(poly_mono(Rat(-8 * k), 0, 1), 1, 1);
    h.add_term(poly_mono(Rat(-4 * k * k), k - 1, 1), 0, 2);
    // 4(wt - (a+b)k - 1)
    h.add_term(poly_const(4) * (var(Var::W) * var(Var::T) -
                                poly_const(k) * (var(Var::A) + var(Var::B)) -
                                poly_const(1)),
               1, 0);
    // 4wku - 2k^2(2b+1) t^(k-1)
    h.add_term(poly_const(4 * k) * var(Var::W) * var(Var::U) -
                   poly_const(2 * k * k) *
                       (poly_const(2) * var(Var::B) + poly_const(1)) *
                       poly_mono(Rat(1), params.k - 1),
               0, 1);
    return bind(h, params);
}

DiffOp integral1(const ModelParams& params) {
    if (params.k < 1) throw Error("integral1 requires k >= 1");
    long k = params.k;
    DiffOp x;
    // -4k^2 u (t^k - u)
    x.add_term(poly_const(-4 * k * k) * var(Var::U) *
                   (poly_mono(Rat(1), params.k) - var(Var::U)),
               0, 2);
    // -4k^2 ((b + 1/2) t^k - (a+b+1) u)
    x.add_term(poly_const(-4 * k * k) *
                   ((var(Var::B) + poly_const(1, 2)) * poly_mono(Rat(1), params.k) -
                    (var(Var::A) + var(Var::B) + poly_const(1)) * var(Var::U)),
               0, 1);
    return bind(x, params);
}

DiffOp integral2(const ModelParams& params) {
    require_k(params.k, 1, 4, "integral");
    const DiffOp& sym = cached_op(
        params.k == 1   ? "I2.1"
        : params.k == 2 ? "I2.2"
        : params.k == 3 ? "I2.3"
                        : "I2.4",
        [&]() -> DiffOp {
            switch (params.k) {
                case 1: {
                    // 4(t-u) Dt^2 + 4(w(u-t) + a + 1/2) Dt
                    DiffOp op;
                    op.add_term(poly_const(4) * (var(Var::T) - var(Var::U)), 2, 0);
                    op.add_term(poly_const(4) * (var(Var::W) * (var(Var::U) - var(Var::T)) +
                                                 var(Var::A) + poly_const(1, 2)),
                                1, 0);
                    return op;
                }
                case 2:
                    return parse_operator(detail::kI2ReferenceK2);
                case 3:
                    return from_table(detail::kI2TableK3, detail::kI2TableK3Size);
                default:
                    return from_table(detail::kI2TableK4, detail::kI2TableK4Size);
            }
        });
    return bind(sym, params);
}

DiffOp integral12(const ModelParams& params, I12Source source) {
    require_k(params.k, 1, 4, "integral commutator");
    const char* key = nullptr;
    if (source == I12Source::Computed) {
        key = params.k == 1   ? "I12c.1"
              : params.k == 2 ? "I12c.2"
              : params.k == 3 ? "I12c.3"
                              : "I12c.4";
    } else {
        key = params.k == 1   ? "I12f.1"
              : params.k == 2 ? "I12f.2"
              : params.k == 3 ? "I12f.3"
                              : "I12f.4";
    }
    const DiffOp& sym = cached_op(key, [&]() -> DiffOp {
        if (source == I12Source::Computed) {
            ModelParams symbolic{params.k, {}, {}, {}};
            return commutator(integral1(symbolic), integral2(symbolic));
        }
        switch (params.k) {
            case 1: return parse_operator(detail::kI12ReferenceK1);
            case 2: return parse_operator(detail::kI12ReferenceK2);
            case 3: return from_table(detail::kI12TableK3, detail::kI12TableK3Size);
            default: return from_table(detail::kI12TableK4, detail::kI12TableK4Size);
        }
    });
    return bind(sym, params);
}

SpectralData spectral_data(const ModelParams& params) {
    if (params.k < 1) throw Error("spectral_data requires k >= 1");
    long k = params.k;
    SpectralData s{params.k, {}, {}};
    ParamPoly ab = var(Var::A) + var(Var::B);
    s.ground_energy =
        poly_const(2) * var(Var::W) * (poly_const(k) * ab + poly_const(1));
    s.lowest_x_eigenvalue = poly_const(k * k) * ab * ab;
    auto bindings = params.bindings();
    if (!bindings.empty()) {
        s.ground_energy = s.ground_energy.eval_params(bindings);
        s.lowest_x_eigenvalue = s.lowest_x_eigenvalue.eval_params(bindings);
    }
    return s;
}

ParamPoly SpectralData::eps(unsigned p, unsigned q) const {
    return poly_const(4 * (long(p) + long(k) * q)) * ParamPoly::variable(Var::W);
}

GenPolynomial expected_closure(unsigned k, ClosureKind which) {
    require_k(k, 1, 4, "closure");
    using detail::GenTermEntry;
    const GenTermEntry* table = nullptr;
    std::size_t size = 0;
    switch (which) {
        case ClosureKind::DoubleI1:
            switch (k) {
                case 1: table = detail::kClosureK1DoubleI1; size = detail::kClosureK1DoubleI1Size; break;
                case 2: table = detail::kClosureK2DoubleI1; size = detail::kClosureK2DoubleI1Size; break;
                case 3: table = detail::kClosureK3DoubleI1; size = detail::kClosureK3DoubleI1Size; break;
                default: table = detail::kClosureK4DoubleI1; size = detail::kClosureK4DoubleI1Size; break;
            }
            break;
        case ClosureKind::DoubleI2:
            switch (k) {
                case 1: table = detail::kClosureK1DoubleI2; size = detail::kClosureK1DoubleI2Size; break;
                case 2: table = detail::kClosureK2DoubleI2; size = detail::kClosureK2DoubleI2Size; break;
                case 3: table = detail::kClosureK3DoubleI2; size = detail::kClosureK3DoubleI2Size; break;
                default: table = detail::kClosureK4DoubleI2; size = detail::kClosureK4DoubleI2Size; break;
            }
            break;
        case ClosureKind::Syzygy:
            switch (k) {
                case 1: table = detail::kSyzygyK1; size = detail::kSyzygyK1Size; break;
                case 2: table = detail::kSyzygyK2; size = detail::kSyzygyK2Size; break;
                case 3: table = detail::kSyzygyK3; size = detail::kSyzygyK3Size; break;
                default:
                    throw NotPrintedError(
                        "the general-w syzygy at k=4 has no known closed form");
            }
            break;
        case ClosureKind::SyzygyOmega0:
            switch (k) {
                case 1:
                case 2:
                    return expected_closure(k, ClosureKind::Syzygy)
                        .eval_params({{Var::W, Rat(0)}});
                case 3: table = detail::kSyzygyOmega0K3; size = detail::kSyzygyOmega0K3Size; break;
                default: table = detail::kSyzygyOmega0K4; size = detail::kSyzygyOmega0K4Size; break;
            }
            break;
    }
    return from_table(table, size);
}

GenPolynomial free_motion_closure(ClosureKind which) {
    switch (which) {
        case ClosureKind::DoubleI1:
            return from_table(detail::kFreeDoubleI1K1, detail::kFreeDoubleI1K1Size);
        case ClosureKind::DoubleI2:
            return from_table(detail::kFreeDoubleI2K1, detail::kFreeDoubleI2K1Size);
        default:
            return from_table(detail::kFreeSyzygyK1, detail::kFreeSyzygyK1Size);
    }
}

std::pair<GenPolynomial, GenPolynomial> conjecture_forms(unsigned k) {
    if (k < 1) throw Error("conjecture_forms requires k >= 1");
    long k2 = long(k) * k;
    long k4 = k2 * k2;
    long sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k

    GenPolynomial q_lead;
    q_lead.add(gen_mono(k, 0, 1, 0), poly_const(sign * 8 * k2));
    q_lead.add(gen_mono(0, 0, 2, 0), poly_const(-8 * k2));

    GenPolynomial r_lead;
    ParamPoly a = ParamPoly::variable(Var::A);
    ParamPoly b = ParamPoly::variable(Var::B);
    ParamPoly ab = a + b;
    r_lead.add(gen_mono(2 * k, 0, 0, 0),
               poly_const(4 * k4) * (poly_const(2) * a + poly_const(1)) *
                   (poly_const(2) * a - poly_const(3)));
    r_lead.add(gen_mono(k, 1, 1, 0), poly_const(-sign * 16 * k2));
    r_lead.add(gen_mono(k, 0, 0, 1), poly_const(sign * 8 * k2));
    r_lead.add(gen_mono(k, 0, 1, 0),
               poly_const(-sign * 16 * k4) *
                   (poly_const(2) * a * a + poly_const(2) * a * b - a + b -
                    poly_const(9)));
    r_lead.add(gen_mono(0, 1, 2, 0), poly_const(16 * k2));
    r_lead.add(gen_mono(0, 0, 2, 0),
               poly_const(16 * k2) *
                   (poly_const(k2) * (ab * ab - poly_const(9))));
    r_lead.add(gen_mono(0, 0, 1, 1), poly_const(-16 * k2));
    return {q_lead, r_lead};
}

}  // namespace ttw::catalog
