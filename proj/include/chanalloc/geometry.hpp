#ifndef CHANALLOC_GEOMETRY_HPP_
#define CHANALLOC_GEOMETRY_HPP_

#include <cmath>

namespace chanalloc {

/// Planar position in km. No wrap-around at area edges.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Euclidean distance in km.
inline double distance(const Point& a, const Point& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

} // namespace chanalloc

#endif // CHANALLOC_GEOMETRY_HPP_
