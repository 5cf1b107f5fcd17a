#pragma once

// Published eigenvalue tables for the combined potential, shipped as
// read-only data for computed-vs-published diff reports.
//
// Every table uses a = 2, b = 50, mu = 1, V0 = 1, V1 = 0.01, V2 = 0.5 and
// lists (n, l) rows with one column per D = 3, 4, 5. Only table 1 is
// reproduced by the closed form; tables 2 and 3 are not reproducible with
// their stated parameters (see README). Empty cells were printed as "-".

#include <array>
#include <optional>
#include <span>

#include "spectrum.hpp"

namespace enu::reference {

struct TableEntry {
    int n;
    int l;
    std::array<std::optional<double>, 3> energy;  // D = 3, 4, 5
};

struct PublishedTable {
    int id;
    double alpha;
    double omega;
    double lambda_adj;
    std::span<const TableEntry> entries;

    /// Problem stated in the table caption.
    ProblemSpec caption_problem() const {
        ProblemSpec spec;
        spec.potential = {1.0, 0.01, 0.5, 2.0, 50.0, alpha};
        spec.approx = {omega, lambda_adj};
        return spec;
    }

    std::optional<double> lookup(int n, int l, int D) const {
        if (D < 3 || D > 5) return std::nullopt;
        for (const auto& e : entries)
            if (e.n == n && e.l == l) return e.energy[D - 3];
        return std::nullopt;
    }
};

inline constexpr std::array<int, 3> kTableDims{3, 4, 5};

namespace detail {

inline const std::array<TableEntry, 16> kTable1{{
{0, 0, {-0.693561969, -1.483794256, -2.749854638}},
        {1, 0, {-2.400662738, -3.520372978, -5.150960406}},
        {2, 0, {-5.107768168, -6.565715334, -8.583619961}},
        {2, 1, {-8.583619961, -11.07635272, -14.02084003}},
        {3, 0, {-8.81487444, -10.61307885, -13.02521012}},
        {3, 1, {-13.02521012, -15.92716134, -19.28351018}},
        {3, 2, {-19.28351018, -23.08296764, -27.32202956}},
        {4, 0, {-13.52198098, -15.66115049, -18.47027444}},
        {4, 1, {-18.47027444, -21.78663214, -25.56228156}},
        {4, 2, {-25.56228156, -29.78098662, -34.43704278}},
        {4, 3, {-34.43704278, -39.52876901, -45.05614563}},
        {5, 0, {-19.22908762, -21.7095332, -24.91696686}},
        {5, 1, {-24.91696686, -28.65040322, -32.84945913}},
        {5, 2, {-32.84945913, -37.4928681, -42.57256298}},
        {5, 3, {-42.57256298, -48.08566295, -54.0315293}},
        {5, 4, {-54.0315293, -60.41053758, -67.22351809}},
}};

inline const std::array<TableEntry, 16> kTable2{{
        {0, 0, {-113.1097402, -560.9727952, -1316.065556}},
        {1, 0, {-201.8384501, -694.656059, -1491.095494}},
        {2, 0, {-315.5719709, -856.6308917, -1697.976766}},
        {2, 1, {-1697.976766, -2836.531982, -4271.56472}},
        {3, 0, {-454.3074065, -1045.392669, -1934.208287}},
        {3, 1, {-1934.208287, -3118.419739, -4597.997338}},
        {3, 2, {-4597.997338, -6373.079767, -8443.782235}},
        {4, 0, {-618.0437527, -1260.207686, -2198.334215}},
        {4, 1, {-2198.334215, -3429.966834, -4955.615228}},
        {4, 2, {-4955.615228, -6775.822056, -8890.971435}},
        {4, 3, {-8890.971435, -11301.32424, -14007.05962}},
        {5, 0, {-806.7805866, -1500.683512, -2489.460427}},
        {5, 1, {-2489.460427, -3769.946194, -5342.999737}},
        {5, 2, {-5342.999737, -7209.520922, -9370.16336}},
        {5, 3, {-9370.16336, -11825.38215, -14575.49657}},
        {5, 4, {-14575.49657, -17620.73484, -20961.26357}},
}};

inline const std::array<TableEntry, 16> kTable3{{
        {0, 0, {std::nullopt, std::nullopt, -0.006591882}},
        {1, 0, {-0.051095051, -0.056748905, -0.066201555}},
        {2, 0, {-0.151319951, -0.1577294, -0.168286976}},
        {2, 1, {-0.168286976, -0.18286666, -0.201369665}},
        {3, 0, {-0.291655888, -0.298908764, -0.310765078}},
        {3, 1, {-0.310765078, -0.326970774, -0.347291388}},
        {3, 2, {-0.347291388, -0.371548105, -0.399625631}},
        {4, 0, {-0.472024074, -0.480146418, -0.493359927}},
        {4, 1, {-0.493359927, -0.51130219, -0.533626149}},
        {4, 2, {-0.533626149, -0.560049273, -0.590366077}},
        {4, 3, {-0.590366077, -0.62444112, -0.662195555}},
        {5, 0, {-0.692404982, -0.701407183, -0.71600143}},
        {5, 1, {-0.71600143, -0.735725353, -0.760129567}},
        {5, 2, {-0.760129567, -0.78883907, -0.821569698}},
        {5, 3, {-0.821569698, -0.858120539, -0.89835829}},
        {5, 4, {-0.89835829, -0.94220149, -0.989607378}},
}};

}  // namespace detail

inline PublishedTable table(int id) {
    switch (id) {
        case 1: return {1, 1.0, 1.6, 3.2, detail::kTable1};
        case 2: return {2, 5.0, 1.7, 3.3, detail::kTable2};
        case 3: return {3, 5.0, 12.0, 3.1, detail::kTable3};
        default: throw Error(ErrorCode::InvalidParameter, "published tables are numbered 1..3");
    }
}

}  // namespace enu::reference
