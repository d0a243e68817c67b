#ifndef ARSCB_CSV_HPP
#define ARSCB_CSV_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "arscb/ar_process.hpp"
#include "arscb/kolmogorov.hpp"
#include "arscb/yule_walker.hpp"

namespace arscb {

using MetaList = std::vector<std::pair<std::string, std::string>>;

/// Round-trip formatting of a double (shortest %.17g form).
std::string format_double(double v);

/// Series CSV: `# key=value` metadata lines, a header row `x`, then one
/// value per row, pre-sample first. presample_len is always written.
void write_series_csv(const std::string& path, const Series& series,
                      const MetaList& extra_meta = {});

struct SeriesFile {
    Series series;
    std::map<std::string, std::string> meta;
};

/// Reads a series CSV. Rows are split into presample/body according to
/// the presample_len metadata; without it everything lands in body and
/// the caller decides how to re-label.
SeriesFile read_series_csv(const std::string& path);

/// Key=value text record of a fit: order, phi_hat, gamma_hat, n and the
/// residual bandwidth.
void write_fit_record(const std::string& path, const FittedAr& fit, double bandwidth);

/// Two-column CSV (z, F(z)).
void write_grid_csv(const std::string& path, const Eigen::VectorXd& z,
                    const Eigen::VectorXd& f, const MetaList& extra_meta = {});

/// Four-column band CSV (z, lower, center, upper).
void write_band_csv(const std::string& path, const Band& band,
                    const Eigen::VectorXd& grid, const MetaList& extra_meta = {});

} // namespace arscb

#endif
