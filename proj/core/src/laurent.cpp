#include "hilb/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hilb {

namespace {
const Int kZero = 0;
}

LaurentPoly::LaurentPoly(long lo, std::vector<Int> coeffs)
    : lo_(lo), c_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, long e) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = e;
        p.c_.push_back(std::move(c));
    }
    return p;
}

const Int& LaurentPoly::at(long e) const {
    if (is_zero() || e < lo_ || e > hi()) return kZero;
    return c_[static_cast<size_t>(e - lo_)];
}

void LaurentPoly::trim() {
    size_t first = 0;
    while (first < c_.size() && c_[first] == 0) ++first;
    if (first == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t last = c_.size();
    while (c_[last - 1] == 0) --last;
    if (first > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
    c_.resize(last - first);
    lo_ += static_cast<long>(first);
}

void LaurentPoly::ensure_window(long lo, long hi) {
    if (is_zero()) {
        lo_ = lo;
        c_.assign(static_cast<size_t>(hi - lo + 1), Int(0));
        return;
    }
    if (lo < lo_) {
        c_.insert(c_.begin(), static_cast<size_t>(lo_ - lo), Int(0));
        lo_ = lo;
    }
    long cur_hi = this->hi();
    if (hi > cur_hi) c_.resize(c_.size() + static_cast<size_t>(hi - cur_hi), Int(0));
}

void LaurentPoly::reserve_window(long lo, long hi) { ensure_window(lo, hi); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled_shifted(o, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled_shifted(o, -1, 0);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& v : r.c_) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    return r;
}

void LaurentPoly::add_scaled_shifted(const LaurentPoly& src, const Int& c,
                                     long shift) {
    if (src.is_zero() || c == 0) return;
    ensure_window(src.lo_ + shift, src.hi() + shift);
    size_t base = static_cast<size_t>(src.lo_ + shift - lo_);
    if (c == 1) {
        for (size_t i = 0; i < src.c_.size(); ++i)
            mpz_add(c_[base + i].get_mpz_t(), c_[base + i].get_mpz_t(),
                    src.c_[i].get_mpz_t());
    } else if (c == -1) {
        for (size_t i = 0; i < src.c_.size(); ++i)
            mpz_sub(c_[base + i].get_mpz_t(), c_[base + i].get_mpz_t(),
                    src.c_[i].get_mpz_t());
    } else {
        for (size_t i = 0; i < src.c_.size(); ++i)
            mpz_addmul(c_[base + i].get_mpz_t(), c.get_mpz_t(),
                       src.c_[i].get_mpz_t());
    }
    trim();
}

void add_mul_into(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    acc.ensure_window(a.lo_ + b.lo_, a.hi() + b.hi());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        size_t base = static_cast<size_t>(a.lo_ + static_cast<long>(i) +
                                          b.lo_ - acc.lo_);
        for (size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(acc.c_[base + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                       b.c_[j].get_mpz_t());
    }
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly acc;
    if (a.is_zero() || b.is_zero()) return acc;
    add_mul_into(acc, a, b);
    acc.trim();
    return acc;
}

LaurentPoly LaurentPoly::reversed() const {
    if (is_zero()) return {};
    LaurentPoly r;
    r.lo_ = -hi();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

bool LaurentPoly::is_symmetric() const { return *this == reversed(); }

bool LaurentPoly::is_unit_monomial() const {
    return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

Int LaurentPoly::sum() const {
    Int s = 0;
    for (const auto& v : c_) s += v;
    return s;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = lo_; e <= hi(); ++e) {
        const Int& v = at(e);
        if (v == 0) continue;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        first = false;
        Int a = abs(v);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "z";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace hilb
