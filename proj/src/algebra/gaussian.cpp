#include "ctknot/gaussian.hpp"

#include "ctknot/error.hpp"

namespace ctknot {

GaussianRational::GaussianRational(Rational re, Rational im)
    : re_(std::move(re)), im_(std::move(im)) {
    canonicalize();
}

void GaussianRational::canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    if (sgn(n) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero Gaussian rational");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussianRational GaussianRational::pow(unsigned e) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

std::string GaussianRational::to_string() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_im) return re_.get_str();

    std::string out;
    if (has_re) {
        out = re_.get_str();
        out += sgn(im_) < 0 ? "-" : "+";
    } else if (sgn(im_) < 0) {
        out = "-";
    }
    const Rational mag = abs(im_);
    if (mag != 1) out += mag.get_str();
    out += "i";
    return out;
}

}  // namespace ctknot
