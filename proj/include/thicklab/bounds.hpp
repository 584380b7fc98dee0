#ifndef THICKLAB_BOUNDS_HPP
#define THICKLAB_BOUNDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thicklab {

// Lower/upper thickness bounds with the formula or argument that produced
// each endpoint.  All arithmetic in this module is exact and integral.
struct BoundReport {
    int lower = 1;
    int upper = 1;
    bool exact = true;  // lower == upper
    std::vector<std::string> provenance;
};

// theta(K_n) = floor((n + 7) / 6), except theta(K_9) = theta(K_10) = 3.
inline int thickness_complete(int n) {
    if (n < 1) throw std::invalid_argument("thickness_complete: n must be >= 1");
    if (n == 9 || n == 10) return 3;
    return (n + 7) / 6;
}

inline BoundReport thickness_complete_report(int n) {
    BoundReport r;
    r.lower = r.upper = thickness_complete(n);
    r.exact = true;
    r.provenance = {n == 9 || n == 10 ? "exception theta(K_9) = theta(K_10) = 3"
                                      : "formula theta(K_n) = floor((n + 7) / 6)"};
    return r;
}

// theta(K_n x P_2) = floor((n + 8) / 6), except theta(K_9 x P_2) = 3.  Exact
// for every n.
inline BoundReport thickness_kn_p2(int n) {
    if (n < 1) throw std::invalid_argument("thickness_kn_p2: n must be >= 1");
    BoundReport r;
    if (n == 9) {
        r.lower = r.upper = 3;
        r.provenance = {"exception theta(K_9 x P_2) = 3"};
    } else {
        r.lower = r.upper = (n + 8) / 6;
        r.provenance = {"formula theta(K_n x P_2) = floor((n + 8) / 6)"};
        if (n % 6 == 4) {
            r.provenance.push_back(
                "n = 6p + 4: Euler face-count lower bound p + 2 meets the "
                "upper bound theta(K_{n+1}) = p + 2");
        }
    }
    r.exact = true;
    return r;
}

// theta(K_n x P_m) for m >= 3: floor((n + 9) / 6), except K_3 x P_m is planar
// and K_8 x P_m has an explicit biplanar decomposition; unresolved for
// n = 6p + 3 with p >= 2, reported as the interval [p+1, p+2].
inline BoundReport thickness_kn_pm(int n, int m) {
    if (n < 1) throw std::invalid_argument("thickness_kn_pm: n must be >= 1");
    if (m < 3) throw std::invalid_argument("thickness_kn_pm: m must be >= 3");
    BoundReport r;
    if (n == 3) {
        r.lower = r.upper = 1;
        r.provenance = {"exception: K_3 x P_m (a stack of prisms) is planar"};
    } else if (n == 8) {
        r.lower = r.upper = 2;
        r.provenance = {"recursive biplanar construction of K_8 x P_m",
                        "lower bound theta(K_8) = 2"};
    } else if (n % 6 == 3 && n >= 15) {
        const int p = (n - 3) / 6;
        r.lower = p + 1;
        r.upper = p + 2;
        r.provenance = {"open case n = 6p + 3 (p >= 2)",
                        "lower bound theta(K_n) = p + 1",
                        "upper bound floor((n + 9) / 6) = p + 2"};
    } else {
        r.lower = r.upper = (n + 9) / 6;
        r.provenance = {"formula theta(K_n x P_m) = floor((n + 9) / 6) for m >= 3"};
        if (n % 6 == 4) {
            r.provenance.push_back(
                "n = 6p + 4: lower bound theta(K_n x P_2) = p + 2, upper bound "
                "theta(K_{n+2}) = p + 2");
        }
    }
    r.exact = r.lower == r.upper;
    return r;
}

// Euler-count lower bound for theta(K_n x P_2): the face census yields
// theta >= n(n+1) / (6(n-1)); this returns the smallest integer no less than
// that rational, evaluated exactly.
inline int euler_lower_bound_kn_p2(int n) {
    if (n < 2) throw std::invalid_argument("euler_lower_bound_kn_p2: n must be >= 2");
    const std::int64_t num = static_cast<std::int64_t>(n) * (n + 1);
    const std::int64_t den = 6 * (static_cast<std::int64_t>(n) - 1);
    return static_cast<int>((num + den - 1) / den);
}

// Upper bound on the total face count of any planar decomposition of
// K_n x P_2 whose parts all have at least two edges: floor((2n^2 - n) / 3).
inline int face_upper_bound(int n) {
    if (n < 2) throw std::invalid_argument("face_upper_bound: n must be >= 2");
    const std::int64_t num = 2 * static_cast<std::int64_t>(n) * n - n;
    return static_cast<int>(num / 3);
}

}  // namespace thicklab

#endif
