#include "klein/group/bounds.hpp"

#include <stdexcept>
#include <string>

namespace klein {

bool is_prime(const Int& n)
{
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n)
{
    if (n < 1) throw std::invalid_argument("factorize needs a positive integer");
    std::vector<std::pair<Int, unsigned>> out;
    for (Int d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string format_factorization(const std::vector<std::pair<Int, unsigned>>& f)
{
    std::string out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        if (!out.empty()) out += '*';
        out += it->first.get_str();
        if (it->second > 1) out += '^' + std::to_string(it->second);
    }
    return out.empty() ? "1" : out;
}

Int gl_order(const Int& p, unsigned d)
{
    if (d < 1) throw std::invalid_argument("gl_order needs d >= 1");
    if (!is_prime(p)) throw std::invalid_argument("gl_order needs a prime modulus, got " + p.get_str());
    const Int pd = ipow(p, d);
    Int order = 1, pk = 1;
    for (unsigned k = 0; k < d; ++k) {
        order *= pd - pk;
        pk *= p;
    }
    return order;
}

Int automorphism_order_bound()
{
    Int g = 0;
    for (long p : kBoundPrimes) g = gcd(g, gl_order(Int(p), 10));
    return g;
}

}  // namespace klein
