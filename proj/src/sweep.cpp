#include "mclab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mclab/errors.hpp"
#include "mclab/text_io.hpp"

namespace mclab {

const char kDatasetHeader[] = "r_t,r_r,d,diff_coeff,map";

namespace {

void require_positive_list(const std::vector<double>& values, const char* name) {
    if (values.empty()) {
        throw std::invalid_argument(std::string("sweep config: ") + name + " is empty");
    }
    for (double v : values) {
        if (!(v > 0.0)) {
            throw std::invalid_argument(std::string("sweep config: ") + name +
                                        " entries must be positive");
        }
    }
}

std::vector<double> parse_double_list(const std::string& value) {
    std::vector<double> out;
    for (const std::string& tok : split(value, ',')) {
        const std::string t = trim(tok);
        if (!t.empty()) {
            out.push_back(parse_double(t));
        }
    }
    return out;
}

std::string format_double_list(const std::vector<double>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_double(values[i]);
    }
    return out;
}

} // namespace

void SweepConfig::validate() const {
    require_positive_list(diffusion_values, "diff_values");
    require_positive_list(receiver_radius_values, "r_r_values");
    require_positive_list(transmitter_radius_values, "r_t_values");
    require_positive_list(gap_values, "d_values");
    if (molecules < 1) {
        throw std::invalid_argument("sweep config: n_molecules must be at least 1");
    }
    if (steps < 1) {
        throw std::invalid_argument("sweep config: n_steps must be at least 1");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("sweep config: dt must be positive");
    }
    if (vessel_radius && !(*vessel_radius > 0.0)) {
        throw std::invalid_argument("sweep config: vessel_radius must be positive or auto");
    }
}

SweepConfig SweepConfig::read(const std::string& path) {
    const KeyValueFile kv = KeyValueFile::read(path);
    SweepConfig config;
    config.diffusion_values = parse_double_list(kv.require("diff_values"));
    config.receiver_radius_values = parse_double_list(kv.require("r_r_values"));
    config.transmitter_radius_values = parse_double_list(kv.require("r_t_values"));
    config.gap_values = parse_double_list(kv.require("d_values"));
    config.molecules = static_cast<int>(parse_long(kv.require("n_molecules")));
    config.steps = static_cast<int>(parse_long(kv.require("n_steps")));
    config.dt = parse_double(kv.require("dt"));
    config.base_seed = parse_uint64(kv.require("base_seed"));
    const std::string vessel = kv.require("vessel_radius");
    if (vessel == "auto") {
        config.vessel_radius.reset();
    } else {
        config.vessel_radius = parse_double(vessel);
    }
    config.validate();
    return config;
}

void SweepConfig::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << "diff_values = " << format_double_list(diffusion_values) << "\n";
    out << "r_r_values = " << format_double_list(receiver_radius_values) << "\n";
    out << "r_t_values = " << format_double_list(transmitter_radius_values) << "\n";
    out << "d_values = " << format_double_list(gap_values) << "\n";
    out << "n_molecules = " << molecules << "\n";
    out << "n_steps = " << steps << "\n";
    out << "dt = " << format_double(dt) << "\n";
    out << "base_seed = " << base_seed << "\n";
    out << "vessel_radius = " << (vessel_radius ? format_double(*vessel_radius) : std::string("auto"))
        << "\n";
}

std::vector<ChannelParams> generate_grid(const SweepConfig& config) {
    config.validate();
    std::vector<ChannelParams> grid;
    grid.reserve(config.diffusion_values.size() * config.receiver_radius_values.size() *
                 config.transmitter_radius_values.size() * config.gap_values.size());
    uint64_t row = 0;
    for (double diffusion : config.diffusion_values) {
        for (double r_r : config.receiver_radius_values) {
            for (double r_t : config.transmitter_radius_values) {
                for (double gap : config.gap_values) {
                    ChannelParams p;
                    p.transmitter_radius = r_t;
                    p.receiver_radius = r_r;
                    p.gap = gap;
                    p.diffusion = diffusion;
                    p.vessel_radius =
                        config.vessel_radius ? *config.vessel_radius : 2.0 * std::max(r_t, r_r);
                    p.molecules = config.molecules;
                    p.steps = config.steps;
                    p.dt = config.dt;
                    p.seed = stable_mix(config.base_seed, row);
                    p.validate();
                    grid.push_back(p);
                    ++row;
                }
            }
        }
    }
    return grid;
}

Dataset run_sweep(const std::vector<ChannelParams>& grid, int workers) {
    if (workers < 1) {
        throw std::invalid_argument("run_sweep: workers must be at least 1");
    }

    Dataset dataset;
    dataset.rows.resize(grid.size());
    dataset.row_seeds.resize(grid.size());

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error_message;

    auto worker = [&] {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size() || failed.load()) {
                return;
            }
            try {
                const SimResult result = simulate_channel(grid[i]);
                dataset.rows[i].features = {grid[i].transmitter_radius, grid[i].receiver_radius,
                                            grid[i].gap, grid[i].diffusion};
                dataset.rows[i].target = result.map;
                dataset.row_seeds[i] = grid[i].seed;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) {
                    std::ostringstream msg;
                    msg << "sweep row " << i << " (r_t=" << grid[i].transmitter_radius
                        << ", r_r=" << grid[i].receiver_radius << ", d=" << grid[i].gap
                        << ", D=" << grid[i].diffusion << ") failed: " << e.what();
                    error_message = msg.str();
                }
            }
        }
    };

    const int thread_count = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(workers), std::max<size_t>(grid.size(), 1)));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }

    if (failed.load()) {
        throw std::runtime_error(error_message);
    }
    return dataset;
}

bool Dataset::same_rows(const Dataset& other) const {
    if (rows.size() != other.rows.size()) {
        return false;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].features != other.rows[i].features || rows[i].target != other.rows[i].target) {
            return false;
        }
    }
    return true;
}

void write_dataset(const Dataset& dataset, const std::string& path) {
    for (size_t i = 0; i < dataset.rows.size(); ++i) {
        const double t = dataset.rows[i].target;
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("write_dataset: target outside [0, 1] at row " +
                                        std::to_string(i));
        }
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << kDatasetHeader << "\n";
    for (const DatasetRow& row : dataset.rows) {
        out << format_double(row.features[0]) << ',' << format_double(row.features[1]) << ','
            << format_double(row.features[2]) << ',' << format_double(row.features[3]) << ','
            << format_double(row.target) << "\n";
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

Dataset read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) {
        throw ParseError("empty dataset file " + path, 1);
    }
    ++lineno;
    if (trim(line) != kDatasetHeader) {
        throw ParseError(std::string("expected header '") + kDatasetHeader + "'", lineno);
    }

    Dataset dataset;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> fields = split(line, ',');
        if (fields.size() != 5) {
            throw ParseError("expected 5 columns, got " + std::to_string(fields.size()), lineno);
        }
        DatasetRow row;
        try {
            for (int k = 0; k < 4; ++k) {
                row.features[static_cast<size_t>(k)] = parse_double(fields[static_cast<size_t>(k)]);
            }
            row.target = parse_double(fields[4]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
        if (!(row.target >= 0.0 && row.target <= 1.0)) {
            throw ParseError("map value outside [0, 1]", lineno);
        }
        dataset.rows.push_back(row);
    }
    return dataset;
}

} // namespace mclab
