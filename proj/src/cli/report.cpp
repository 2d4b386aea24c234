#include "galrep/cli/report.hpp"

#include "galrep/error.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace galrep::cli {

Json to_json(const Report& r) {
    Json j;
    j["schema"] = schema_id;
    j["timestamp"] = r.timestamp;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    j["trace"] = r.trace;
    j["exit_status"] = r.exit_status;
    return j;
}

Report report_from_json(const Json& j) {
    try {
        if (j.at("schema").get<std::string>() != schema_id)
            throw Error(ErrorKind::InvalidParams, "unknown schema " + j.at("schema").dump());
        Report r;
        r.timestamp = j.at("timestamp").get<std::string>();
        r.command = j.at("command").get<std::string>();
        r.inputs = j.at("inputs");
        r.result = j.at("result");
        r.trace = j.at("trace");
        r.exit_status = j.at("exit_status").get<int>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidParams, std::string("malformed report: ") + e.what());
    }
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array() && !j.empty()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

void headline(const Report& r, std::ostream& os) {
    const auto& res = r.result;
    if (r.command == "check") {
        for (const auto& h : res.at("hypotheses")) {
            os << h.at("name").get<std::string>() << ' ' << lower(h.at("verdict").get<std::string>());
            if (!h.at("where").get<std::string>().empty()) os << ' ' << h.at("where").get<std::string>();
            os << ": " << h.at("evidence").get<std::string>() << '\n';
        }
        if (res.contains("local_case") && !res.at("local_case").is_null())
            os << "local case " << res.at("local_case").get<std::string>() << '\n';
        if (res.contains("bound") && !res.at("bound").is_null())
            os << "dim Im(Res^ur_p) <= " << res.at("bound").at("bound").get<unsigned>() << '\n';
        if (!res.at("conclusion").is_null()) os << "conclusion: " << res.at("conclusion").get<std::string>() << '\n';
        os << res.at("message").get<std::string>() << '\n';
    } else if (r.command == "local") {
        for (const char* key : {"closed", "brute"}) {
            if (!res.contains(key)) continue;
            const auto& rep = res.at(key);
            os << key << ": H^0 at level " << rep.at("level").get<unsigned>() << " = "
               << rep.at("level_structure").at("text").get<std::string>()
               << ", limit quotient dim " << rep.at("limit_quotient_dim").get<unsigned>() << ", h0(V) dim "
               << rep.at("h0_v_dim").get<unsigned>() << '\n';
        }
        if (res.contains("agree")) os << (res.at("agree").get<bool>() ? "methods agree" : "METHODS DISAGREE") << '\n';
    } else if (r.command == "cohomology") {
        os << "|G| = " << res.at("group_order").get<std::size_t>() << ", dim V = " << res.at("module_dim").get<std::size_t>()
           << '\n';
        if (!res.at("witness").is_null())
            os << "vanishing witness: " << res.at("witness").at("description").get<std::string>() << '\n';
        else
            os << "no vanishing witness\n";
        for (const char* key : {"h0", "h1", "h2"})
            if (res.contains(key) && !res.at(key).is_null()) os << key << " = " << res.at(key).dump() << '\n';
    } else if (r.command == "verify") {
        for (const auto& c : res.at("criteria"))
            os << "criterion " << c.at("id").get<unsigned>() << ": " << (c.at("passed").get<bool>() ? "PASS" : "FAIL")
               << "  " << c.at("title").get<std::string>() << '\n';
        os << res.at("passed").get<unsigned>() << " passed, " << res.at("failed").get<unsigned>() << " failed\n";
    }
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "galrep " << r.command << " (" << schema_id << ")\n";
    headline(r, os);
    os << "--\n";
    const auto j = to_json(r);
    for (const auto& [k, v] : j.items()) flatten(v, k, os);
    return os.str();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json to_json(const zring::AbelianPGroupType& t, std::uint64_t p) {
    Json j;
    j["exponents"] = t.exponents();
    j["text"] = t.to_string(p);
    return j;
}

Json to_json(const std::vector<localmodel::TraceEntry>& trace) {
    Json out = Json::array();
    for (const auto& e : trace) out.push_back(Json{{"key", e.key}, {"detail", e.detail}});
    return out;
}

Json to_json(const localmodel::LocalH0Report& r) {
    Json j;
    j["p"] = r.p;
    j["level"] = r.level;
    j["j"] = r.j;
    j["level_structure"] = to_json(r.level_structure, r.p);
    j["limit_quotient_dim"] = r.limit_quotient_dim;
    j["h0_v_dim"] = r.h0_v_dim;
    j["local_case"] = r.local_case ? Json(localmodel::to_string(*r.local_case)) : Json(nullptr);
    j["method"] = r.method;
    j["note"] = r.note;
    return j;
}

Json to_json(const localmodel::BoundReport& b) {
    Json j;
    j["case"] = localmodel::to_string(b.local_case);
    j["j"] = b.j;
    j["raw"] = b.raw;
    j["bound"] = b.bound;
    j["refined"] = b.refined;
    j["excluded_by_b_prime"] = b.excluded_by_b_prime;
    return j;
}

Json to_json(const cohom::CohomologyReport& r) {
    Json j;
    j["group_order"] = r.group_order;
    j["module_dim"] = r.module_dim;
    j["h0"] = r.h0;
    j["z1"] = r.z1;
    j["b1"] = r.b1;
    j["h1"] = r.h1;
    j["z2"] = r.z2 ? Json(*r.z2) : Json(nullptr);
    j["b2"] = r.b2 ? Json(*r.b2) : Json(nullptr);
    j["h2"] = r.h2 ? Json(*r.h2) : Json(nullptr);
    j["method"] = r.method;
    return j;
}

namespace {

std::string str(const ecq::BigInt& x) { return x.str(); }
std::string str(const ecq::Rational& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << '/' << denominator(x);
    return os.str();
}

}  // namespace

Json to_json(const ecq::HypothesisReport& r) {
    Json j;
    const auto& inv = r.invariants;
    j["invariants"] = Json{{"c4", str(inv.c4)}, {"c6", str(inv.c6)}, {"disc", str(inv.disc)}, {"j", str(inv.j)}};
    Json red;
    red["tag"] = ecq::to_string(r.reduction.tag);
    red["v_disc_min"] = r.reduction.v_disc_min;
    red["v_c4_min"] = r.reduction.v_c4_min;
    red["scalings"] = r.reduction.scalings;
    j["reduction_at_p"] = red;
    j["a_p"] = r.a_p ? Json(*r.a_p) : Json(nullptr);

    Json s;
    s["tag"] = ecq::to_string(r.surjectivity.tag);
    s["suspected"] = r.surjectivity.suspected ? Json(ecq::to_string(*r.surjectivity.suspected)) : Json(nullptr);
    s["signatures"] = r.surjectivity.signatures;
    s["aux_bound"] = r.surjectivity.aux_bound;
    Json fams = Json::array();
    for (const auto& f : r.surjectivity.families) {
        Json e;
        e["family"] = ecq::to_string(f.family);
        e["witness_q"] = f.witness ? Json(f.witness->q) : Json(nullptr);
        e["witness_a_q"] = f.witness ? Json(f.witness->a_q) : Json(nullptr);
        fams.push_back(e);
    }
    s["families"] = fams;
    j["surjectivity"] = s;

    Json hs = Json::array();
    for (const auto& h : r.checks)
        hs.push_back(Json{{"name", h.name}, {"verdict", ecq::to_string(h.verdict)}, {"where", h.where},
                          {"evidence", h.evidence}});
    j["hypotheses"] = hs;
    j["local_case"] = r.local_case ? Json(localmodel::to_string(*r.local_case)) : Json(nullptr);
    j["bound"] = r.bound ? to_json(*r.bound) : Json(nullptr);
    j["conclusion"] = r.conclusion ? Json(*r.conclusion) : Json(nullptr);
    j["message"] = r.message;
    return j;
}

}  // namespace galrep::cli
