#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vpg0/harness.hpp"
#include "vpg0/io.hpp"
#include "vpg0/json_io.hpp"
#include "vpg0/layout.hpp"
#include "vpg0/svg.hpp"
#include "vpg0/verify.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitNotCocomparability = 2;
constexpr int kExitParseError = 64;
constexpr int kExitUsage = 65;
constexpr int kExitVerifyFailed = 1;

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

// First keyword decides whether a file holds a graph or a poset.
bool looksLikePoset(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    in >> word;
    return word == "poset";
}

int exitCodeOf(vpg0::Verdict v) {
    switch (v) {
        case vpg0::Verdict::Yes: return kExitYes;
        case vpg0::Verdict::No: return kExitNo;
        case vpg0::Verdict::NotCocomparability: return kExitNotCocomparability;
    }
    return kExitUsage;
}

int reportInvalidInput(const std::string& context, const std::exception& e) {
    std::cerr << context << ": " << e.what() << "\n";
    vpg0::Json report;
    report["verdict"] = "invalid-input";
    report["error"] = e.what();
    std::cout << report.dump(2) + "\n";
    return kExitParseError;
}

int cmdRecognize(const std::string& graphPath, const std::string& jsonOut) {
    auto t0 = Clock::now();
    std::istringstream in(readFile(graphPath));
    vpg0::Graph g;
    try {
        g = vpg0::parseGraph(in);
    } catch (const vpg0::ParseError& e) {
        return reportInvalidInput(graphPath, e);
    }
    double parseMs = msSince(t0);

    auto t1 = Clock::now();
    vpg0::Classification c = vpg0::classifyB0(g);
    vpg0::Json report = vpg0::classificationToJson(g, c);
    report["timings"] = {{"parseMs", parseMs}, {"classifyMs", msSince(t1)}};
    std::string text = report.dump(2) + "\n";
    if (!jsonOut.empty()) writeFile(jsonOut, text);
    std::cout << text;
    return exitCodeOf(c.verdict);
}

int cmdDraw(const std::string& inputPath, const std::string& posetPath, const std::string& sigmaCsv,
            const std::string& jsonOut, const std::string& svgOut, double svgScale, bool jitter) {
    auto t0 = Clock::now();
    vpg0::Graph g;
    std::optional<vpg0::Poset> poset;
    try {
        std::string text = readFile(inputPath);
        if (looksLikePoset(text)) {
            std::istringstream in(text);
            poset = vpg0::parsePoset(in);
            g = vpg0::cocomparabilityGraph(*poset);
        } else {
            std::istringstream in(text);
            g = vpg0::parseGraph(in);
        }
        if (!posetPath.empty()) {
            std::istringstream in(readFile(posetPath));
            poset = vpg0::parsePoset(in);
        }
    } catch (const vpg0::ParseError& e) {
        return reportInvalidInput("input", e);
    }
    std::optional<vpg0::Ordering> sigma;
    if (!sigmaCsv.empty()) {
        try {
            sigma = vpg0::parseOrderingCsv(g, sigmaCsv);
        } catch (const std::invalid_argument& e) {
            return reportInvalidInput("--sigma", e);
        }
    }
    double parseMs = msSince(t0);

    auto t1 = Clock::now();
    vpg0::DrawOutcome outcome;
    try {
        outcome = vpg0::drawB0(g, poset, sigma);
    } catch (const vpg0::InvalidPosetError& e) {
        return reportInvalidInput("--poset", e);
    } catch (const vpg0::InvalidSigmaError& e) {
        return reportInvalidInput("--sigma", e);
    }
    double drawMs = msSince(t1);

    vpg0::Json report = vpg0::classificationToJson(g, outcome.classification);
    report["timings"] = {{"parseMs", parseMs}, {"drawMs", drawMs}};

    if (outcome.drawing) {
        // A drawing never leaves the tool unverified.
        auto t2 = Clock::now();
        const vpg0::Drawing& d = *outcome.drawing;
        vpg0::GraphDiff diff = vpg0::diffGraphs(g, vpg0::intersectionGraph(d));
        vpg0::OrderCheckReport t2rep =
            vpg0::checkOrderIsomorphism(d, *outcome.classification.poset);
        auto anti = vpg0::checkAntisymmetry(d);
        if (!diff.same() || !t2rep.pass() || anti) {
            std::cerr << "internal verification failed; refusing to emit the drawing\n";
            return kExitUsage;
        }
        report["timings"]["verifyMs"] = msSince(t2);
        if (outcome.decomposition)
            report["decomposition"] = vpg0::decompositionToJson(g, *outcome.decomposition);
        report["drawing"] = vpg0::drawingToJson(d);
        if (!jsonOut.empty()) {
            writeFile(jsonOut, vpg0::drawingToJsonText(d));
            report["artifacts"]["json"] = jsonOut;
        }
        if (!svgOut.empty()) {
            vpg0::SvgOptions opt;
            opt.scale = svgScale;
            opt.jitter = jitter;
            writeFile(svgOut, vpg0::drawingToSvg(d, opt));
            report["artifacts"]["svg"] = svgOut;
        }
    }
    std::cout << report.dump(2) + "\n";
    return exitCodeOf(outcome.classification.verdict);
}

int cmdVerify(const std::string& drawingPath, const std::string& graphPath,
              const std::string& posetPath) {
    vpg0::Drawing d;
    vpg0::Graph g;
    std::optional<vpg0::Poset> poset;
    try {
        d = vpg0::drawingFromJson(vpg0::Json::parse(readFile(drawingPath)));
        std::istringstream in(readFile(graphPath));
        g = vpg0::parseGraph(in);
        if (!posetPath.empty()) {
            std::istringstream pin(readFile(posetPath));
            poset = vpg0::parsePoset(pin);
        }
    } catch (const std::exception& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kExitParseError;
    }

    vpg0::Json report;
    bool pass = true;

    vpg0::GraphDiff diff = vpg0::diffGraphs(g, vpg0::intersectionGraph(d));
    vpg0::Json edgeCheck;
    edgeCheck["name"] = "intersection-graph-equality";
    edgeCheck["pass"] = diff.same();
    if (!diff.same()) {
        pass = false;
        vpg0::Json missing = vpg0::Json::array(), extra = vpg0::Json::array();
        for (auto& [u, v] : diff.missing) missing.push_back({u, v});
        for (auto& [u, v] : diff.extra) extra.push_back({u, v});
        edgeCheck["missingEdges"] = missing;
        edgeCheck["spuriousEdges"] = extra;
    }
    report["checks"].push_back(edgeCheck);

    if (poset) {
        try {
            vpg0::OrderCheckReport t2 = vpg0::checkOrderIsomorphism(d, *poset);
            vpg0::Json c;
            c["name"] = "order-isomorphism";
            c.update(vpg0::orderCheckReportToJson(d, t2));
            if (!t2.pass()) pass = false;
            report["checks"].push_back(c);
        } catch (const std::invalid_argument& e) {
            std::cerr << "poset/drawing mismatch: " << e.what() << "\n";
            return kExitParseError;
        }
        vpg0::Json anti;
        anti["name"] = "antisymmetry";
        auto bad = vpg0::checkAntisymmetry(d);
        anti["pass"] = !bad;
        if (bad) {
            pass = false;
            anti["pair"] = {d.labels[bad->first], d.labels[bad->second]};
        }
        report["checks"].push_back(anti);
    }
    report["pass"] = pass;
    std::cout << report.dump(2) + "\n";
    return pass ? kExitYes : kExitVerifyFailed;
}

int cmdGen(const std::string& kind, int n, double density, std::uint64_t seed) {
    if (const char* env = std::getenv("VPG0_SEED")) seed = std::strtoull(env, nullptr, 10);
    vpg0::GenConfig cfg{n, density, seed};
    if (kind == "random-poset") {
        vpg0::emitPoset(vpg0::genRandomPoset(cfg), std::cout);
    } else if (kind == "interval-order") {
        vpg0::emitPoset(vpg0::genIntervalOrder(cfg), std::cout);
    } else if (kind == "bipartite-permutation") {
        vpg0::emitGraph(vpg0::genBipartitePermutation(cfg), std::cout);
    } else if (kind == "cocomparability") {
        vpg0::emitGraph(vpg0::cocomparabilityGraph(vpg0::genRandomPoset(cfg)), std::cout);
    } else {
        std::cerr << "unknown instance kind: " << kind << "\n";
        return kExitUsage;
    }
    return 0;
}

int cmdOracle(const std::string& graphPath) {
    vpg0::Graph g;
    try {
        std::istringstream in(readFile(graphPath));
        g = vpg0::parseGraph(in);
    } catch (const vpg0::ParseError& e) {
        std::cerr << graphPath << ": " << e.what() << "\n";
        return kExitParseError;
    }
    try {
        bool coco = vpg0::oracleCocomparability(g);
        vpg0::Json j;
        j["cocomparability"] = coco;
        std::cout << j.dump(2) + "\n";
        return coco ? kExitYes : kExitNo;
    } catch (const vpg0::SizeLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"B0-VPG recognition, drawing, and verification for cocomparability graphs"};
    app.require_subcommand(1);

    std::string graphPath, posetPath, sigmaCsv, jsonOut, svgOut, drawingPath, kind;
    double svgScale = 40.0, density = 0.5;
    bool jitter = false;
    int n = 8;
    std::uint64_t seed = 1;

    auto* rec = app.add_subcommand("recognize", "decide whether a graph admits a 0-bend drawing");
    rec->add_option("graph", graphPath, "graph file")->required();
    rec->add_option("--json", jsonOut, "write the report to this path");

    auto* draw = app.add_subcommand("draw", "construct and verify a 0-bend drawing");
    draw->add_option("input", graphPath, "graph or poset file")->required();
    draw->add_option("--poset", posetPath, "poset file to honor");
    draw->add_option("--sigma", sigmaCsv, "comma-separated linear extension to honor");
    draw->add_option("--json", jsonOut, "write the drawing JSON to this path");
    draw->add_option("--svg", svgOut, "write an SVG rendering to this path");
    draw->add_option("--scale", svgScale, "SVG pixels per grid unit");
    draw->add_flag("--jitter", jitter, "pull collinear segments visually apart in the SVG");

    auto* ver = app.add_subcommand("verify", "re-check a drawing against a graph (and poset)");
    ver->add_option("drawing", drawingPath, "drawing JSON file")->required();
    ver->add_option("graph", graphPath, "graph file")->required();
    ver->add_option("--poset", posetPath, "poset file for the order checks");

    auto* gen = app.add_subcommand("gen", "emit a random instance");
    gen->add_option("kind", kind,
                    "one of: random-poset, interval-order, bipartite-permutation, cocomparability")
        ->required();
    gen->add_option("--n", n, "element count");
    gen->add_option("--density", density, "relation/edge density in [0,1]");
    gen->add_option("--seed", seed, "generator seed (VPG0_SEED overrides)");

    auto* orc = app.add_subcommand("oracle", "exhaustive cocomparability check (n <= 8)");
    orc->add_option("graph", graphPath, "graph file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmdRecognize(graphPath, jsonOut);
        if (draw->parsed())
            return cmdDraw(graphPath, posetPath, sigmaCsv, jsonOut, svgOut, svgScale, jitter);
        if (ver->parsed()) return cmdVerify(drawingPath, graphPath, posetPath);
        if (gen->parsed()) return cmdGen(kind, n, density, seed);
        if (orc->parsed()) return cmdOracle(graphPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
