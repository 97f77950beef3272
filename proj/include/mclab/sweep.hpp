#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mclab/channel.hpp"

namespace mclab {

// Parameter grid for the dataset sweep. Row order is the Cartesian product
// iterated lexicographically over (D, r_R, r_T, d); row i simulates with
// seed stable_mix(base_seed, i). vessel_radius empty means the per-row rule
// R_v = 2 * max(r_T, r_R).
struct SweepConfig {
    std::vector<double> diffusion_values;
    std::vector<double> receiver_radius_values;
    std::vector<double> transmitter_radius_values;
    std::vector<double> gap_values;
    int molecules = 1000;
    int steps = 3000;
    double dt = 0.01;
    uint64_t base_seed = 0;
    std::optional<double> vessel_radius; // empty: 2 * max radius rule

    void validate() const;

    // Text format: one `key = value` per line, lists comma separated,
    // `vessel_radius = auto` selects the 2 * max radius rule (see README).
    static SweepConfig read(const std::string& path);
    void write(const std::string& path) const;
};

struct DatasetRow {
    std::array<double, 4> features{}; // [r_T, r_R, d, D]
    double target = 0.0;              // mAP
};

// Feature/target table produced by a sweep. row_seeds carries the per-row
// simulation seeds when the dataset came from run_sweep; it is not part of
// the CSV schema, so datasets read back from disk leave it empty.
struct Dataset {
    std::vector<DatasetRow> rows;
    std::vector<uint64_t> row_seeds;

    size_t size() const { return rows.size(); }
    bool same_rows(const Dataset& other) const;
};

// Full Cartesian product of the configured value lists, one ChannelParams
// per row in the documented order.
std::vector<ChannelParams> generate_grid(const SweepConfig& config);

// Simulates every grid row, fanning rows out to `workers` threads. Results
// are gathered in grid order, so the dataset is identical for any worker
// count. Any per-row failure aborts the sweep naming the offending row.
Dataset run_sweep(const std::vector<ChannelParams>& grid, int workers);

// CSV with the exact header `r_t,r_r,d,diff_coeff,map`; numbers in shortest
// round-trip decimal form. read(write(ds)) reproduces rows bit for bit.
void write_dataset(const Dataset& dataset, const std::string& path);
Dataset read_dataset(const std::string& path);

extern const char kDatasetHeader[];

} // namespace mclab
