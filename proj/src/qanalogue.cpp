#include "cwilf/qanalogue.hpp"

#include <numeric>
#include <string>

namespace cwilf {

MultiPoly pq_int(int n) {
    if (n < 0) throw invalid_input("pq_int: negative argument");
    MultiPoly out;
    for (int i = 0; i < n; ++i) {
        Exp e{0, 0, 0, 0, 0};
        e[static_cast<size_t>(Var::q)] = i;
        e[static_cast<size_t>(Var::p)] = n - 1 - i;
        out += MultiPoly::monomial(Int(1), e);
    }
    return out;
}

MultiPoly pq_factorial(int n) {
    if (n < 0) throw invalid_input("pq_factorial: negative argument");
    MultiPoly out(Int(1));
    for (int i = 2; i <= n; ++i) out *= pq_int(i);
    return out;
}

MultiPoly pq_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        throw invalid_input("pq_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
    if (k == 0 || k == n) return MultiPoly(Int(1));
    return MultiPoly::exact_div(pq_factorial(n), pq_factorial(k) * pq_factorial(n - k));
}

MultiPoly pq_binomial_or_zero(int n, int k) {
    if (k < 0 || n < 0 || k > n) return MultiPoly();
    return pq_binomial(n, k);
}

MultiPoly q_int(int n) {
    if (n < 0) throw invalid_input("q_int: negative argument");
    MultiPoly out;
    for (int i = 0; i < n; ++i) out += MultiPoly::variable(Var::q, i);
    return out;
}

MultiPoly q_factorial(int n) {
    if (n < 0) throw invalid_input("q_factorial: negative argument");
    MultiPoly out(Int(1));
    for (int i = 2; i <= n; ++i) out *= q_int(i);
    return out;
}

MultiPoly q_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        throw invalid_input("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
    if (k == 0 || k == n) return MultiPoly(Int(1));
    return MultiPoly::exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

MultiPoly q_binomial_or_zero(int n, int k) {
    if (k < 0 || n < 0 || k > n) return MultiPoly();
    return q_binomial(n, k);
}

MultiPoly q_multinomial(int n, std::span<const int> parts) {
    int sum = 0;
    for (int b : parts) {
        if (b < 0) throw invalid_input("q_multinomial: negative part");
        sum += b;
    }
    if (sum != n) throw invalid_input("q_multinomial: parts must sum to n");
    MultiPoly den(Int(1));
    for (int b : parts) den *= q_factorial(b);
    return MultiPoly::exact_div(q_factorial(n), den);
}

} // namespace cwilf
