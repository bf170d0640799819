#ifndef CUBICLOCAL_CACHE_HPP
#define CUBICLOCAL_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "cubiclocal/polyz.hpp"

namespace cubiclocal {
namespace density {

// On-disk record of a solved local density, {"n":..,"g":[..],"h":[..]} with
// gamma/delta attached when n >= 2. Coefficients are JSON numbers when they
// fit, decimal strings otherwise.
struct DensityRecord {
    int n;
    ZPoly g;
    ZPoly h;
    std::optional<std::pair<long, long>> asymp;
};

std::string density_record_json(const DensityRecord& rec);

// Returns nothing on a missing or unparsable file.
std::optional<DensityRecord> load_density_record(const std::filesystem::path& dir, int n);
void store_density_record(const std::filesystem::path& dir, const DensityRecord& rec);

}  // namespace density
}  // namespace cubiclocal

#endif
