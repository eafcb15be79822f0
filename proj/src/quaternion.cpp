#include "qhardy/quaternion.hpp"

#include <numbers>

namespace qhardy {

SliceCoordinates slice_decompose(const Quaternion& q) {
    const double vn = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (vn <= kRealTol * (1.0 + std::abs(q.w)))
        return {q.w, 0.0, ImaginaryUnit::i()};
    return {q.w, vn, ImaginaryUnit::from_vector(q.x / vn, q.y / vn, q.z / vn)};
}

Quaternion exp_on_slice(const ImaginaryUnit& I, double theta) {
    return Quaternion::real(std::cos(theta)) + I.q() * std::sin(theta);
}

std::vector<ImaginaryUnit> sample_unit_sphere(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_unit_sphere: n must be positive");
    std::vector<ImaginaryUnit> out;
    out.reserve(n);

    static const ImaginaryUnit axes[6] = {
        ImaginaryUnit::i(), -ImaginaryUnit::i(), ImaginaryUnit::j(),
        -ImaginaryUnit::j(), ImaginaryUnit::k(), -ImaginaryUnit::k()};
    const std::size_t naxes = n < 6 ? n : std::size_t{6};
    for (std::size_t m = 0; m < naxes; ++m) out.push_back(axes[m]);

    // Golden-angle spiral for the remainder; the seed shifts the spiral phase
    // so distinct seeds give distinct (still deterministic) layouts.
    const std::size_t rest = n - naxes;
    const double golden = std::numbers::pi_v<double> * (3.0 - std::sqrt(5.0));
    const double phase = golden * static_cast<double>(seed % 360361);
    for (std::size_t m = 0; m < rest; ++m) {
        const double zc = 1.0 - 2.0 * (static_cast<double>(m) + 0.5) / static_cast<double>(rest);
        const double rc = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        const double phi = golden * static_cast<double>(m) + phase;
        out.push_back(ImaginaryUnit::from_vector(rc * std::cos(phi), rc * std::sin(phi), zc));
    }
    return out;
}

}  // namespace qhardy
