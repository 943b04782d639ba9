#include "qdiamond/jsonl.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>

namespace qdiamond {

std::string to_jsonl(const Congruence& claim, std::size_t bound)
{
    nlohmann::ordered_json j;
    j["k"] = claim.k;
    j["A"] = claim.A;
    j["B"] = claim.B;
    j["M"] = claim.M;
    j["bound"] = bound;
    j["family"] = claim.family;
    j["status"] = "holds_up_to_bound";
    return j.dump();
}

void write_jsonl(std::ostream& os, std::span<const Congruence> claims, std::size_t bound)
{
    for (const auto& c : claims)
        os << to_jsonl(c, bound) << '\n';
}

std::vector<JsonlRecord> read_jsonl(std::istream& is)
{
    std::vector<JsonlRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            const auto j = nlohmann::json::parse(line);
            JsonlRecord rec{{j.at("k").get<std::uint64_t>(), j.at("A").get<std::uint64_t>(),
                             j.at("B").get<std::uint64_t>(), j.at("M").get<std::uint64_t>(),
                             j.at("family").get<std::string>(), ClaimSource::Scanned},
                            j.at("bound").get<std::size_t>(), j.at("status").get<std::string>()};
            rec.claim.validate();
            out.push_back(std::move(rec));
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("jsonl line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

} // namespace qdiamond
