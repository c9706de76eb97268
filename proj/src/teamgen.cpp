#include "teamind/teamgen.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace teamind {

namespace {

std::string label(char prefix, std::size_t index, std::uint64_t salt) {
    return prefix + std::to_string(index) + "_" + std::to_string(salt % 9973);
}

}  // namespace

Team bench_team(std::uint64_t seed, std::size_t groups, std::size_t x_values,
                std::size_t y_values) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> xs(x_values), ys(y_values);
    for (std::size_t i = 0; i < x_values; ++i) xs[i] = label('x', i, rng());
    for (std::size_t j = 0; j < y_values; ++j) ys[j] = label('y', j, rng());

    std::vector<std::vector<std::string>> rows;
    rows.reserve(groups * x_values * y_values);
    for (std::size_t g = 0; g < groups; ++g) {
        std::string zg = label('z', g, rng());
        for (std::size_t i = 0; i < x_values; ++i) {
            for (std::size_t j = 0; j < y_values; ++j) {
                rows.push_back({zg, xs[i], ys[j],
                                std::to_string((g + i + j) % 7),
                                std::to_string((g + i * j) % 11)});
            }
        }
    }
    return Team(Schema{{"z", "x", "y", "u", "v"}}, std::move(rows));
}

Team subsample(const Team& team, std::size_t count, std::uint64_t seed) {
    std::size_t total = team.row_count();
    std::vector<std::size_t> ids(total);
    for (std::size_t i = 0; i < total; ++i) ids[i] = i;
    if (count < total) {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
            std::swap(ids[i], ids[j]);
        }
        ids.resize(count);
        std::sort(ids.begin(), ids.end());
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(ids.size());
    for (std::size_t id : ids) rows.push_back(team.row(id));
    return Team(team.schema(), std::move(rows));
}

}  // namespace teamind
