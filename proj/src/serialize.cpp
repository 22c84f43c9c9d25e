#include "gsp/serialize.hpp"

#include <sstream>

namespace gsp {

Json json_node_set(NodeSet s) {
    Json a = Json::array();
    for (int i : s.indices()) a.push_back(i + 1);
    return a;
}

Json json_element(const WeylElement& w) {
    Json a = Json::array();
    for (int letter : w.word()) a.push_back(letter + 1);
    return a;
}

Json json_count(const CountPolynomial& c) {
    Json coeffs = Json::array();
    for (long long v : c.coeffs()) coeffs.push_back(v);
    return Json{{"factored", c.factored_str()}, {"coeffs", coeffs}};
}

Json json_descriptor(const PieceDescriptor& p) {
    Json steps = Json::array();
    for (const auto& s : p.steps)
        steps.push_back(Json{{"Jn", json_node_set(s.J)},
                             {"Jpn", json_node_set(s.Jp)},
                             {"un", json_element(s.u)}});
    return Json{{"J", json_node_set(p.J)},
                {"Jprime", json_node_set(p.Jp)},
                {"y", json_element(p.y)},
                {"steps", steps},
                {"w", json_element(p.w)},
                {"Jinf", json_node_set(p.J_inf)},
                {"twist", json_element(p.twist)},
                {"exponent", p.exponent},
                {"count", json_count(p.count)},
                {"dim", p.dim}};
}

Json json_sum_check(const TwistedPair& tp, const SumCheck& check) {
    return Json{{"J", json_node_set(tp.J)},
                {"Jprime", json_node_set(tp.Jp)},
                {"y", json_element(tp.y)},
                {"lhs", check.lhs.str()},
                {"rhs", check.rhs.str()},
                {"ok", check.ok}};
}

Json json_atlas(const CompletionAtlas& atlas) {
    Json rows = Json::array();
    for (const auto& r : atlas.rows) {
        Json row = json_descriptor(r.sigma);
        row["sigma_id"] = r.sigma_id;
        row["quotient_count"] = json_count(r.quotient_count);
        row["dim"] = r.dim;
        rows.push_back(std::move(row));
    }
    return Json{{"rows", rows},
                {"total", json_count(atlas.total)},
                {"total_degree", atlas.total.degree()}};
}

Json json_model_report(const ModelReport& rep, const std::string& mode_name) {
    Json config{{"d", rep.cfg.d}, {"q", rep.cfg.q}, {"mode", mode_name}};
    if (rep.cfg.mode == ModelMode::Full) {
        config["J"] = json_node_set(rep.cfg.J);
        Json sig = Json::array();
        for (int s : rep.cfg.sigma) sig.push_back(s + 1);
        config["sigma"] = sig;
    }
    Json buckets = Json::array();
    for (const auto& b : rep.buckets) {
        Json signature = Json::array();
        for (const auto& r : b.key)
            signature.push_back(Json{{"J", json_node_set(r.J)},
                                     {"Jp", json_node_set(r.Jp)},
                                     {"pos", json_element(r.pos)}});
        Json jb{{"signature", signature},
                {"size", b.size},
                {"matched_sigma", b.matched_sigma},
                {"predicted", b.predicted}};
        if (b.classifier_k > 0) jb["classifier_k"] = b.classifier_k;
        buckets.push_back(std::move(jb));
    }
    return Json{{"config", config},
                {"buckets", buckets},
                {"total", rep.total},
                {"verdict", rep.pass ? "pass" : "fail"}};
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string steps_str(const PieceDescriptor& p) {
    std::string s;
    for (const auto& st : p.steps) {
        if (!s.empty()) s += ';';
        s += '(' + st.J.str() + '|' + st.Jp.str() + '|' + st.u.str() + ')';
    }
    return s;
}

}  // namespace

std::string csv_atlas(const CompletionAtlas& atlas) {
    std::ostringstream os;
    os << "J,sigma_id,steps,w,J_inf,twist,exponent,count_factored,dim\n";
    for (const auto& r : atlas.rows) {
        os << csv_quote(r.J.str()) << ',' << r.sigma_id << ',' << csv_quote(steps_str(r.sigma))
           << ',' << csv_quote(r.sigma.w.str()) << ',' << csv_quote(r.sigma.J_inf.str()) << ','
           << csv_quote(r.sigma.twist.str()) << ',' << r.sigma.exponent << ','
           << csv_quote(r.quotient_count.factored_str()) << ',' << r.dim << '\n';
    }
    return os.str();
}

std::string text_descriptor(const PieceDescriptor& p) {
    std::ostringstream os;
    os << "w=" << p.w.str() << "  l(w)=" << p.w.length() << "  steps=" << steps_str(p)
       << "  Jinf=" << p.J_inf.str() << "  twist=" << p.twist.str() << "  exponent=" << p.exponent
       << "  count=" << p.count.factored_str() << "  dim=" << p.dim;
    return os.str();
}

std::string text_atlas(const CompletionAtlas& atlas) {
    std::ostringstream os;
    for (const auto& r : atlas.rows)
        os << "J=" << r.J.str() << "  sigma=" << r.sigma_id << "  w=" << r.sigma.w.str()
           << "  Jinf=" << r.sigma.J_inf.str() << "  twist=" << r.sigma.twist.str()
           << "  count=" << r.quotient_count.factored_str() << "  dim=" << r.dim << '\n';
    os << "total: " << atlas.total.str() << "  (degree " << atlas.total.degree() << ")\n";
    return os.str();
}

}  // namespace gsp
