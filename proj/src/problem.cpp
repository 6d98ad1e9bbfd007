#include "bp/problem.hpp"

#include <stdexcept>

#include "bp/kernels.hpp"

namespace bp {

Problem::Problem(GridSpec grid, SpectralSymbol symbol)
    : grid_(grid), symbol_(std::move(symbol)) {
    validate(grid_);
    check_invertible(symbol_);
}

void Problem::check_grid(const ComplexField& u) const {
    if (!(u.grid == grid_)) throw std::invalid_argument(family() + ": field grid mismatch");
}

ComplexField Problem::apply_Lref(const ComplexField& u) const {
    check_grid(u);
    return apply_symbol(u, symbol_, SymbolOp::Multiply);
}

ComplexField Problem::apply_G(const ComplexField& q) const {
    check_grid(q);
    return apply_symbol(q, symbol_, SymbolOp::Divide);
}

ComplexField Problem::apply_G_adjoint(const ComplexField& q) const {
    check_grid(q);
    return apply_symbol_adjoint(q, symbol_, SymbolOp::Divide);
}

ComplexField Problem::apply_A_adjoint(const ComplexField& u) const {
    ComplexField lu = apply_symbol_adjoint(u, symbol_, SymbolOp::Multiply);
    ComplexField vu = apply_V_adjoint(u);
    kernels::sub(lu.data, vu.data, lu.data);
    return lu;
}

ComplexField Problem::born_residual(const ComplexField& u, const ComplexField& f) const {
    check_grid(u);
    check_grid(f);
    ComplexField vu = apply_V(u);
    kernels::add(vu.data, f.data, vu.data);
    ComplexField g = apply_G(vu);
    kernels::sub(g.data, u.data, g.data);
    return g;
}

std::map<std::string, std::string> Problem::metadata() const {
    return {{"family", family()},
            {"nx", std::to_string(grid_.nx)},
            {"ny", std::to_string(grid_.ny)},
            {"lx", std::to_string(grid_.lx)},
            {"ly", std::to_string(grid_.ly)},
            {"bc", bc_name(grid_.bc)}};
}

}  // namespace bp
