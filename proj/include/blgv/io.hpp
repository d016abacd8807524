#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "blgv/grid.hpp"

namespace blgv {

/// CSV with %.17g number formatting so identical runs produce byte-identical
/// files.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    static std::string num(double x);

private:
    std::ofstream out_;
    std::size_t width_;
};

/// Snapshot v1, little-endian: magic "BLGV", version u32, N_x u32, N_y u32,
/// L_x f64, Y_max f64, t f64, then N_x*N_y f64 values, row-major
/// (index = i_x * N_y + j_y).
void save_snapshot(const std::string& path, const Field& f);
/// y-nodes are regenerated from the header (plus the stretch factor for
/// stretched grids, which the header does not carry).
Field load_snapshot(const std::string& path, double stretch = 1.0);

void write_report(const std::string& path,
                  const std::vector<std::pair<std::string, std::string>>& entries);

/// Renderer-agnostic gnuplot scripts for whatever CSV series the directory
/// holds; returns the scripts written and warns (on the returned list) about
/// expected-but-missing inputs.
struct PlotEmission {
    std::vector<std::string> scripts;
    std::vector<std::string> missing;
};
PlotEmission emit_plots(const std::string& report_dir);

} // namespace blgv
