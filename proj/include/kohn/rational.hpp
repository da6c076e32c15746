// Exact coefficient arithmetic: the Gaussian rationals Q(i).
//
// A GaussianRational is a pair of GMP rationals (real and imaginary part),
// always kept in lowest terms with positive denominators; mpq_class
// arithmetic preserves canonical form, so canonicalize() is only needed
// when a value is built from raw numerator/denominator input.

#pragma once

#include <gmpxx.h>
#include <string>

namespace kohn {

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2); divisor must be nonzero
        mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / norm;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / norm;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        GaussianRational one(1);
        return one /= *this;
    }

    // Debug form "a+bi"; canonical rendering lives in render.hpp.
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        std::string s = re_.get_str();
        s += (im_ > 0 ? "+" : "");
        s += im_.get_str();
        s += "i";
        return s;
    }

private:
    mpq_class re_, im_;
};

} // namespace kohn
