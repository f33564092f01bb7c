#ifndef VK4_EXACT_HPP
#define VK4_EXACT_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace vk4 {

using Int = mpz_class;
using Rat = mpq_class;

// A point of Q^d, d = 3 or 4. Exact arithmetic only; nothing in the
// geometry layers ever touches floating point except final display.
using QPoint = std::vector<Rat>;

QPoint qpoint(std::initializer_list<long> coords);
QPoint sub(const QPoint& a, const QPoint& b);
QPoint add(const QPoint& a, const QPoint& b);
QPoint scale(const Rat& s, const QPoint& a);
Rat dot(const QPoint& a, const QPoint& b);

// Determinant of an n x n matrix given as rows, n <= 6.
Rat det(const std::vector<QPoint>& rows);

// Rank of a set of vectors in Q^d.
int rank_of(std::vector<QPoint> vecs);

// True when the points are affinely independent (their difference
// vectors from the first point have full rank).
bool affinely_independent(const std::vector<QPoint>& pts);

std::string rat_str(const Rat& q);
double rat_double(const Rat& q);

// Solution of a dense rational linear system A u = b.
// When consistent, u = particular + span(nullspace).
struct LinearSolution {
    bool consistent = false;
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> nullspace;
};

LinearSolution solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace vk4

#endif
