#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "blasius/config.hpp"
#include "blasius/interval.hpp"

namespace blasius {

// One checked quantity: the computed enclosure and, when the literature gives
// a reference band, that band plus the containment verdict.
struct CertItem {
    std::string name;
    IntervalValue computed;
    std::optional<IntervalValue> band;
    bool pass = true;
    std::string note;
};

struct CertificateSection {
    CertificateSection() = default;
    explicit CertificateSection(std::string n) : name(std::move(n)) {}
    std::string name;
    std::vector<CertItem> items;
    bool verdict = true;
    std::string failure;
};

struct Certificate {
    std::string version;
    Config config;
    std::vector<CertificateSection> sections;
    bool overall = false;
    double total_ms = 0;
};

// Runs the full pipeline in dependency order. Section failures are recorded
// (with detail) rather than thrown; `overall` is the conjunction.
Certificate run_certificate(const Config& cfg);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
std::string render_report(const nlohmann::ordered_json& cert_json);

}  // namespace blasius
