#include "hilb/genfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace hilb::gen {

QZSeries g_series(long order) {
    QZSeries s = QZSeries::one(order);
    for (long j = 1; j <= order; ++j) {
        s.mul_binomial(-1, 0, j);
        s.mul_binomial(-1, 0, j);
        s.div_binomial(-1, 1, j);
        s.div_binomial(-1, -1, j);
    }
    return s;
}

QZSeries f_series_reference(long k, long order) {
    QZSeries g = g_series(order);
    QZSeries eta_pow = pow(pochhammer(0, 1, order), static_cast<unsigned long>(k));
    return mul(mul(g, g), invert(eta_pow));
}

namespace {

// Scalar q-series for (q;q)^e (e of either sign) as plain integer rows.
std::vector<Int> pochhammer_power_scalar(long e, long order) {
    std::vector<Int> s(static_cast<size_t>(order) + 1);
    s[0] = 1;
    for (long j = 1; j <= order; ++j) {
        for (long rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                // multiply by (1 - q^j)
                for (long n = order; n >= j; --n)
                    s[static_cast<size_t>(n)] -= s[static_cast<size_t>(n - j)];
            } else {
                // divide by (1 - q^j)
                for (long n = j; n <= order; ++n)
                    s[static_cast<size_t>(n)] += s[static_cast<size_t>(n - j)];
            }
        }
    }
    return s;
}

} // namespace

QZSeries f_series(long k, long order) {
    if (k < 1) throw Error("f_series needs k >= 1");
    const long N = order;
    // zeta-dependent part 1/((zeta q;q)^2 (zeta^{-1} q;q)^2) on raw windows:
    // T[n][i] is the coefficient of zeta^(i-n) q^n, window fixed at [-n, n].
    // Support stays inside the window because every factor shifts the zeta
    // exponent by at most the q exponent it consumes.
    std::vector<std::vector<Int>> T(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n)
        T[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n + 1), Int(0));
    T[0][0] = 1;
    for (int pass = 0; pass < 4; ++pass) {
        // two passes with zeta-shift +1, two with -1
        const long sgn = (pass < 2) ? 1 : -1;
        for (long j = 1; j <= N; ++j) {
            for (long n = j; n <= N; ++n) {
                // divide row block by (1 - zeta^sgn q^j):
                // T[n] += zeta^sgn * T[n-j]
                const std::vector<Int>& src = T[static_cast<size_t>(n - j)];
                std::vector<Int>& dst = T[static_cast<size_t>(n)];
                const size_t off = static_cast<size_t>(j + sgn);
                for (size_t i = 0; i < src.size(); ++i)
                    if (mpz_sgn(src[i].get_mpz_t()) != 0)
                        mpz_add(dst[i + off].get_mpz_t(), dst[i + off].get_mpz_t(),
                                src[i].get_mpz_t());
            }
        }
    }
    // scalar part (q;q)^(4-k), convolved in if nontrivial
    QZSeries f(N);
    if (k == 4) {
        for (long n = 0; n <= N; ++n)
            f.mutable_row(n) = LaurentPoly(-n, std::move(T[static_cast<size_t>(n)]));
        return f;
    }
    std::vector<Int> s = pochhammer_power_scalar(4 - k, N);
    for (long n = 0; n <= N; ++n) {
        std::vector<Int> row(static_cast<size_t>(2 * n + 1));
        for (long i = 0; i <= n; ++i) {
            const Int& si = s[static_cast<size_t>(i)];
            if (si == 0) continue;
            const std::vector<Int>& src = T[static_cast<size_t>(n - i)];
            const size_t off = static_cast<size_t>(i);
            for (size_t t = 0; t < src.size(); ++t)
                if (mpz_sgn(src[t].get_mpz_t()) != 0)
                    mpz_addmul(row[t + off].get_mpz_t(), si.get_mpz_t(),
                               src[t].get_mpz_t());
        }
        f.mutable_row(n) = LaurentPoly(-n, std::move(row));
    }
    return f;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<long, long>, std::shared_ptr<const QZSeries>> f_cache;

struct ScalarSeries {
    long order = -1;
    std::vector<Int> v;
};
std::map<long, std::shared_ptr<const ScalarSeries>> p_cache;

} // namespace

std::shared_ptr<const QZSeries> f_series_cached(long k, long order) {
    const auto key = std::make_pair(k, order);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = f_cache.find(key);
        if (it != f_cache.end()) return it->second;
    }
    auto built = std::make_shared<const QZSeries>(f_series(k, order));
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = f_cache.emplace(key, std::move(built));
    (void)inserted; // on a race the first insert wins; both values are equal
    return it->second;
}

namespace {

// Smallest cached f_series for this k with order >= n; builds one if absent.
std::shared_ptr<const QZSeries> f_series_at_least(long k, long n) {
    std::shared_ptr<const QZSeries> f;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        long best = -1;
        for (const auto& [key, val] : f_cache) {
            if (key.first != k || key.second < n) continue;
            if (best < 0 || key.second < best) {
                best = key.second;
                f = val;
            }
        }
    }
    if (!f) f = f_series_cached(k, std::max(n, 32L));
    return f;
}

} // namespace

Int a(long m, long k, long n) {
    if (n < 0) throw OrderExceeded("a(m,k,n) needs n >= 0");
    return f_series_at_least(k, n)->coeff(n, m);
}

Int p_colored(long k, long n) {
    if (k < 1) throw Error("p_colored needs k >= 1");
    if (n < 0) return 0;
    std::shared_ptr<const ScalarSeries> s;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = p_cache.find(k);
        if (it != p_cache.end() && it->second->order >= n) s = it->second;
    }
    if (!s) {
        auto built = std::make_shared<ScalarSeries>();
        built->order = std::max(n, 64L);
        built->v = pochhammer_power_scalar(-k, built->order);
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = p_cache.find(k);
        if (it == p_cache.end() || it->second->order < built->order)
            p_cache[k] = std::move(built);
        s = p_cache[k];
    }
    return s->v[static_cast<size_t>(n)];
}

bool sum_rule_check(long k, long n) {
    return f_series_at_least(k, n)->row(n).sum() == p_colored(k, n);
}

HodgeDiamond HodgeDiamond::K3() {
    HodgeDiamond d;
    d.h[0][0] = 1;
    d.h[2][0] = 1;
    d.h[0][2] = 1;
    d.h[2][2] = 1;
    d.h[1][1] = 20;
    return d;
}

void HodgeDiamond::validate() const {
    for (int p = 0; p < 3; ++p)
        for (int r = 0; r < 3; ++r) {
            if (h[p][r] < 0)
                throw Error("Hodge numbers must be non-negative");
            if (!projective) continue;
            if (h[p][r] != h[r][p])
                throw Error("Hodge symmetry h^{p,r} = h^{r,p} violated at p=" +
                            std::to_string(p) + ", r=" + std::to_string(r));
            if (h[p][r] != h[2 - p][2 - r])
                throw Error("Poincare duality h^{p,r} = h^{2-p,2-r} violated at p=" +
                            std::to_string(p) + ", r=" + std::to_string(r));
        }
}

Int ChiYPolynomial::eval(const Int& y) const {
    Int acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
        acc *= y;
        acc += c[i];
    }
    return acc;
}

bool ChiYPolynomial::palindromic() const {
    for (size_t i = 0, j = c.size(); i < j; ++i, --j)
        if (c[i] != c[j - 1]) return false;
    return true;
}

ChiYPolynomial chi_y(long n) {
    if (n < 1) throw OrderExceeded("chi_y needs n >= 1");
    ChiYPolynomial p;
    p.n = n;
    p.c.resize(static_cast<size_t>(2 * n) + 1);
    for (long r = 0; r <= 2 * n; ++r) {
        Int v = a(r - n, 24, n);
        if (r % 2 != 0) v = -v;
        p.c[static_cast<size_t>(r)] = std::move(v);
    }
    return p;
}

BiLaurent BiLaurent::constant(Int c) {
    BiLaurent b;
    if (c != 0) {
        b.nx_ = b.ny_ = 1;
        b.v_.push_back(std::move(c));
    }
    return b;
}

const Int& BiLaurent::at(long ex, long ey) const {
    static const Int kZero = 0;
    if (is_zero() || ex < lox_ || ex > hi_x() || ey < loy_ || ey > hi_y())
        return kZero;
    return v_[static_cast<size_t>((ex - lox_) * ny_ + (ey - loy_))];
}

void BiLaurent::ensure_window(long lx, long hx, long ly, long hy) {
    if (!is_zero()) {
        lx = std::min(lx, lox_);
        hx = std::max(hx, hi_x());
        ly = std::min(ly, loy_);
        hy = std::max(hy, hi_y());
        if (lx == lox_ && hx == hi_x() && ly == loy_ && hy == hi_y()) return;
    }
    const long nnx = hx - lx + 1, nny = hy - ly + 1;
    std::vector<Int> nv(static_cast<size_t>(nnx * nny));
    for (long ex = lox_; ex < lox_ + nx_; ++ex)
        for (long ey = loy_; ey < loy_ + ny_; ++ey)
            nv[static_cast<size_t>((ex - lx) * nny + (ey - ly))] =
                std::move(v_[static_cast<size_t>((ex - lox_) * ny_ + (ey - loy_))]);
    lox_ = lx;
    loy_ = ly;
    nx_ = nnx;
    ny_ = nny;
    v_ = std::move(nv);
}

void BiLaurent::add_scaled_shifted(const BiLaurent& src, const Int& c, long sx,
                                   long sy) {
    if (src.is_zero() || c == 0) return;
    ensure_window(src.lox_ + sx, src.hi_x() + sx, src.loy_ + sy, src.hi_y() + sy);
    for (long ex = src.lox_; ex < src.lox_ + src.nx_; ++ex)
        for (long ey = src.loy_; ey < src.loy_ + src.ny_; ++ey) {
            const Int& sv = src.v_[static_cast<size_t>((ex - src.lox_) * src.ny_ +
                                                       (ey - src.loy_))];
            if (sv == 0) continue;
            Int& dv = v_[static_cast<size_t>((ex + sx - lox_) * ny_ +
                                             (ey + sy - loy_))];
            mpz_addmul(dv.get_mpz_t(), c.get_mpz_t(), sv.get_mpz_t());
        }
}

XYSeries gottsche_series(const HodgeDiamond& hd, long order) {
    hd.validate();
    XYSeries s;
    s.order = order;
    s.rows.resize(static_cast<size_t>(order) + 1);
    s.rows[0] = BiLaurent::constant(1);
    for (long j = 1; j <= order; ++j) {
        for (int p = 0; p < 3; ++p)
            for (int r = 0; r < 3; ++r) {
                const Int& hpr = hd.h[p][r];
                if (hpr == 0) continue;
                const long sx = p - 1, sy = r - 1;
                const long reps = hpr.get_si();
                for (long rep = 0; rep < reps; ++rep) {
                    if ((p + r) % 2 != 0) {
                        // numerator factor (1 + x^sx y^sy q^j)
                        for (long n = order; n >= j; --n)
                            s.rows[static_cast<size_t>(n)].add_scaled_shifted(
                                s.rows[static_cast<size_t>(n - j)], 1, sx, sy);
                    } else {
                        // denominator factor 1/(1 - x^sx y^sy q^j)
                        for (long n = j; n <= order; ++n)
                            s.rows[static_cast<size_t>(n)].add_scaled_shifted(
                                s.rows[static_cast<size_t>(n - j)], 1, sx, sy);
                    }
                }
            }
    }
    return s;
}

LaurentPoly specialize_row(const BiLaurent& row) {
    if (row.is_zero()) return {};
    std::vector<Int> acc(static_cast<size_t>(row.hi_y() - row.lo_y() + 1));
    for (long ex = row.lo_x(); ex <= row.hi_x(); ++ex)
        for (long ey = row.lo_y(); ey <= row.hi_y(); ++ey) {
            const Int& v = row.at(ex, ey);
            if (v == 0) continue;
            Int& slot = acc[static_cast<size_t>(ey - row.lo_y())];
            if (((ex + ey) % 2) != 0)
                slot -= v;
            else
                slot += v;
        }
    return LaurentPoly(row.lo_y(), std::move(acc));
}

} // namespace hilb::gen
