#pragma once

#include "squint/fraction.hpp"
#include "squint/ring.hpp"
#include "squint/supermatrix.hpp"

#include <stdexcept>
#include <string>

namespace squint {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Canonical-order text form; parse(print(f)) == f exactly.
/// Terms `c * x[e,i,j]^k * ...` joined by + and -.
std::string print_polynomial(const Polynomial& f);
Polynomial parse_polynomial(const RingPtr& ctx, const std::string& text);

std::string print_fraction(const EvenFraction& f);

std::string print_matrix(const SuperMatrix<Polynomial>& m);
std::string print_multidegree(const Quiver& q, const MultiDegree& n);

} // namespace squint
