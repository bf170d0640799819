#include "cubiclocal/cache.hpp"

#include <fstream>

#include "json.hpp"

namespace cubiclocal {
namespace density {

namespace {

using nlohmann::json;

json coeffs_to_json(const ZPoly& p) {
    json arr = json::array();
    for (const auto& c : p) {
        if (c.fits_slong_p() &&
            std::abs(c.get_si()) <= (1l << 53)) {
            arr.push_back(c.get_si());
        } else {
            arr.push_back(c.get_str());
        }
    }
    return arr;
}

ZPoly coeffs_from_json(const json& arr) {
    ZPoly p;
    for (const auto& v : arr) {
        if (v.is_number_integer())
            p.push_back(Int(v.get<long>()));
        else if (v.is_string())
            p.push_back(Int(v.get<std::string>(), 10));
        else
            throw std::invalid_argument("bad coefficient entry");
    }
    zp_trim(p);
    return p;
}

std::filesystem::path record_path(const std::filesystem::path& dir, int n) {
    return dir / ("rho_" + std::to_string(n) + ".json");
}

}  // namespace

std::string density_record_json(const DensityRecord& rec) {
    json j;
    j["n"] = rec.n;
    j["g"] = coeffs_to_json(rec.g);
    j["h"] = coeffs_to_json(rec.h);
    if (rec.asymp) {
        j["gamma"] = rec.asymp->first;
        j["delta"] = rec.asymp->second;
    }
    return j.dump();
}

std::optional<DensityRecord> load_density_record(const std::filesystem::path& dir, int n) {
    std::ifstream in(record_path(dir, n));
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        DensityRecord rec;
        rec.n = j.at("n").get<int>();
        if (rec.n != n) return std::nullopt;
        rec.g = coeffs_from_json(j.at("g"));
        rec.h = coeffs_from_json(j.at("h"));
        if (j.contains("gamma") && j.contains("delta"))
            rec.asymp = std::make_pair(j["gamma"].get<long>(), j["delta"].get<long>());
        if (zp_is_zero(rec.h)) return std::nullopt;
        return rec;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void store_density_record(const std::filesystem::path& dir, const DensityRecord& rec) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(record_path(dir, rec.n));
    if (!out) return;  // cache is advisory
    out << density_record_json(rec) << "\n";
}

}  // namespace density
}  // namespace cubiclocal
