// Command-line driver: verifies presentation files and built-in examples,
// derives brackets, computes centers and invariants, builds truncated
// enveloping algebras and the End(V) composite, and round-trips everything
// through the text format.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "homkernel/builtins.hpp"
#include "homkernel/document.hpp"

namespace fs = std::filesystem;
using namespace homkernel;
namespace bi = homkernel::builtins;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitStructural = 2;
constexpr int kMaxDegreeCap = 6;

struct Target {
    ResolvedDocument resolved;
    PresentationDocument doc;
    bool isBuiltin = false;
};

/// "name(arg1,arg2)" -> {name, args}; plain names have no args.
bool splitCall(const std::string& text, std::string& name,
               std::vector<std::string>& args) {
    auto open = text.find('(');
    if (open == std::string::npos) {
        name = text;
        args.clear();
        return true;
    }
    if (text.back() != ')') return false;
    name = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    args.clear();
    std::string cur;
    for (char c : inner) {
        if (c == ',') {
            args.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !inner.empty()) args.push_back(cur);
    return true;
}

int intArg(const std::vector<std::string>& args, size_t k, const std::string& who) {
    if (k >= args.size())
        throw StructuralError("built-in '" + who + "' is missing an argument");
    try {
        return std::stoi(args[k]);
    } catch (const std::exception&) {
        throw StructuralError("built-in '" + who + "' expects integer arguments");
    }
}

HopfPtr builtinHopf(const std::string& name);

std::optional<Target> tryBuiltin(const std::string& text) {
    std::string name;
    std::vector<std::string> args;
    if (!splitCall(text, name, args)) return std::nullopt;
    Target t;
    t.isBuiltin = true;
    if (text == "h2" || text == "kz2" || text == "triv(1)") {
        t.resolved.kind = "hom-hopf";
        t.resolved.hopf = builtinHopf(text);
        t.resolved.name = text;
        t.doc = documentOfHopf(*t.resolved.hopf, "hom-hopf");
        return t;
    }
    if (text == "a4") {
        t.resolved.kind = "yd-algebra";
        t.resolved.ydAlgebra = bi::a4();
        t.resolved.ydModule =
            std::make_shared<const YDModulePresentation>(bi::a4()->module);
        t.resolved.hopf = bi::a4Hopf();
        t.resolved.name = "a4";
        t.doc = documentOfAlgebra(*bi::a4(), "builtin:h2");
        return t;
    }
    if (text == "ut2") {
        t.resolved.kind = "yd-algebra";
        t.resolved.ydAlgebra = bi::ut2();
        t.resolved.ydModule =
            std::make_shared<const YDModulePresentation>(bi::ut2()->module);
        t.resolved.name = "ut2";
        t.doc = documentOfAlgebra(*bi::ut2(), "builtin:triv(1)");
        return t;
    }
    if (name == "triv" && !args.empty()) {
        auto a = bi::triv(intArg(args, 0, name));
        t.resolved.kind = "yd-algebra";
        t.resolved.ydAlgebra = a;
        t.resolved.ydModule = std::make_shared<const YDModulePresentation>(a->module);
        t.resolved.name = text;
        t.doc = documentOfAlgebra(*a, "builtin:triv(1)");
        return t;
    }
    if (name == "triv-abelian") {
        auto yd = bi::trivAbelian(intArg(args, 0, name));
        Tensor zero({inAxis(yd->basis), inAxis(yd->basis), outAxis(yd->basis)});
        auto lie = std::make_shared<const BraidedLiePresentation>(
            BraidedLiePresentation::make(*yd, zero));
        t.resolved.kind = "braided-lie";
        t.resolved.lie = lie;
        t.resolved.ydModule = yd;
        t.resolved.name = text;
        t.doc = documentOfLie(*lie, "builtin:triv(1)");
        return t;
    }
    if (name == "superspace") {
        auto yd = bi::superspace(intArg(args, 0, name), intArg(args, 1, name));
        t.resolved.kind = "yd-module";
        t.resolved.ydModule = yd;
        t.resolved.name = text;
        t.doc = documentOfModule(*yd, "builtin:kz2");
        return t;
    }
    if (name == "adjoint") {
        if (args.size() != 1) throw StructuralError("adjoint takes one Hopf built-in");
        auto a = bi::adjoint(builtinHopf(args[0]));
        t.resolved.kind = "yd-algebra";
        t.resolved.ydAlgebra = a;
        t.resolved.ydModule = std::make_shared<const YDModulePresentation>(a->module);
        t.resolved.name = text;
        t.doc = documentOfAlgebra(*a, "builtin:" + args[0]);
        return t;
    }
    if (name == "coadjoint") {
        if (args.size() != 1)
            throw StructuralError("coadjoint takes one Hopf built-in");
        auto m = bi::coadjoint(builtinHopf(args[0]));
        t.resolved.kind = "yd-module";
        t.resolved.ydModule = m;
        t.resolved.name = text;
        t.doc = documentOfModule(*m, "builtin:" + args[0]);
        return t;
    }
    return std::nullopt;
}

HopfPtr builtinHopf(const std::string& name) {
    if (name == "h2") return bi::h2();
    if (name == "kz2") return bi::kz2();
    if (name == "triv(1)") return bi::trivialHopf();
    if (name == "a4") return bi::a4Hopf();
    throw StructuralError("unknown Hopf built-in '" + name + "'");
}

PresentationDocument loadFile(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parseDocument(buf.str());
}

HopfPtr loadHopfRef(const std::string& ref, const fs::path& relativeTo, int depth);

ResolvedDocument resolveAt(const PresentationDocument& doc, const fs::path& dir,
                           int depth) {
    if (depth > 8) throw StructuralError("reference chain too deep");
    return resolveDocument(doc, [&](const std::string& ref) {
        return loadHopfRef(ref, dir, depth + 1);
    });
}

HopfPtr loadHopfRef(const std::string& ref, const fs::path& relativeTo, int depth) {
    if (ref.rfind("builtin:", 0) == 0) return builtinHopf(ref.substr(8));
    fs::path p = relativeTo / ref.substr(5);
    ResolvedDocument sub = resolveAt(loadFile(p), p.parent_path(), depth);
    if (!sub.hopf)
        throw StructuralError("reference '" + ref + "' is not a Hopf presentation");
    return sub.hopf;
}

Target loadTarget(const std::string& text) {
    if (auto builtin = tryBuiltin(text)) return *builtin;
    fs::path p(text);
    Target t;
    t.doc = loadFile(p);
    t.resolved = resolveAt(t.doc, p.parent_path(), 0);
    return t;
}

// ---- suites -----------------------------------------------------------------

using Job = std::function<Report()>;

Report runJobs(const std::string& subject, std::vector<Job> jobs, int parallel) {
    Report total(subject);
    if (parallel > 1) {
        std::vector<std::future<Report>> futures;
        for (auto& j : jobs)
            futures.push_back(std::async(std::launch::async, std::move(j)));
        for (auto& f : futures) total.merge(f.get());
    } else {
        for (auto& j : jobs) total.merge(j());
    }
    return total;
}

const YDModulePresentation& moduleOf(const Target& t) {
    if (t.resolved.ydModule) return *t.resolved.ydModule;
    throw StructuralError("target has no module structure");
}

Report runSuite(const Target& t, const std::string& kind, int cap, int jobs) {
    std::vector<Job> list;
    const auto& r = t.resolved;
    auto needHopf = [&]() -> HopfPtr {
        if (r.hopf) return r.hopf;
        throw StructuralError("target is not a Hopf-style presentation");
    };
    if (kind == "hom-algebra") {
        AlgebraPresentation part = r.hopf           ? r.hopf->algebraPart()
                                   : r.ydAlgebra    ? r.ydAlgebra->algebraPart()
                                                    : throw StructuralError(
                                                          "target has no algebra data");
        list.push_back([part, cap] { return check_hom_algebra(part, cap); });
    } else if (kind == "hom-coalgebra") {
        auto part = needHopf()->coalgebraPart();
        list.push_back([part, cap] { return check_hom_coalgebra(part, cap); });
    } else if (kind == "hom-bialgebra" || kind == "hom-hopf") {
        HopfPtr h = needHopf();
        bool antipode = (kind == "hom-hopf");
        list.push_back([h, cap] { return check_hom_algebra(h->algebraPart(), cap); });
        list.push_back([h, cap] { return check_hom_coalgebra(h->coalgebraPart(), cap); });
        list.push_back([h, cap] { return check_hom_bialgebra(*h, cap); });
        if (antipode)
            list.push_back([h, cap] { return check_antipode(*h, cap); });
    } else if (kind == "yd-module") {
        auto m = std::make_shared<const YDModulePresentation>(moduleOf(t));
        list.push_back([m, cap] { return check_hom_module(*m, cap); });
        list.push_back([m, cap] { return check_hom_comodule(*m, cap); });
        list.push_back([m, cap] { return check_yd_compatibility(*m, cap); });
    } else if (kind == "yd-algebra") {
        if (!r.ydAlgebra) throw StructuralError("target is not a module algebra");
        auto a = r.ydAlgebra;
        list.push_back([a, cap] { return check_hom_algebra(a->algebraPart(), cap); });
        list.push_back([a, cap] { return check_hom_module(a->module, cap); });
        list.push_back([a, cap] { return check_hom_comodule(a->module, cap); });
        list.push_back([a, cap] { return check_yd_compatibility(a->module, cap); });
        list.push_back([a, cap] { return check_yd_algebra(*a, cap); });
    } else if (kind == "braided-lie") {
        if (!r.lie) throw StructuralError("target carries no bracket");
        auto l = r.lie;
        list.push_back([l, cap] { return check_hom_module(l->module, cap); });
        list.push_back([l, cap] { return check_hom_comodule(l->module, cap); });
        list.push_back([l, cap] { return check_yd_compatibility(l->module, cap); });
        list.push_back([l, cap] { return verify_braided_lie(*l, cap); });
    } else if (kind == "enveloping") {
        HopfPtr h = needHopf();
        if (!r.ydModule)
            throw StructuralError("enveloping verification needs action and coaction");
        auto m = r.ydModule;
        list.push_back([h, m, cap] { return verify_enveloping_tables(*h, *m, cap); });
    } else if (kind == "biproduct") {
        HopfPtr h = needHopf();
        list.push_back([h, cap] { return check_hom_algebra(h->algebraPart(), cap); });
        list.push_back([h, cap] { return check_hom_coalgebra(h->coalgebraPart(), cap); });
        list.push_back([h, cap] { return check_hom_bialgebra(*h, cap); });
        list.push_back([h, cap] { return check_antipode(*h, cap); });
    } else {
        throw StructuralError("cannot verify kind '" + kind + "'");
    }
    return runJobs(t.resolved.name + " as " + kind, std::move(list), jobs);
}

// ---- output helpers ----------------------------------------------------------

void printReport(const Report& rep, bool machine) {
    if (machine)
        rep.machine(std::cout);
    else
        std::cout << rep.human();
}

std::string goldenDir() {
    if (const char* dir = std::getenv("HOMKERNEL_GOLDEN_DIR")) return dir;
    return "golden";
}

int handleDocOutput(const std::string& bytes, const std::string& outPath,
                    const std::string& golden, const std::string& writeGolden) {
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) throw StructuralError("cannot write '" + outPath + "'");
        out << bytes;
    }
    if (!writeGolden.empty()) {
        fs::path p = fs::path(goldenDir()) / writeGolden;
        fs::create_directories(p.parent_path());
        std::ofstream out(p);
        if (!out) throw StructuralError("cannot write '" + p.string() + "'");
        out << bytes;
        std::cout << "golden written: " << p.string() << "\n";
    }
    if (!golden.empty()) {
        fs::path p = fs::path(goldenDir()) / golden;
        std::ifstream in(p);
        if (!in) throw StructuralError("missing golden file '" + p.string() + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() != bytes) {
            std::cout << "GOLDEN MISMATCH against " << p.string() << "\n";
            return kExitFail;
        }
        std::cout << "golden match: " << p.string() << "\n";
    }
    return kExitPass;
}

std::shared_ptr<const BraidedLiePresentation> lieOf(const Target& t) {
    if (t.resolved.lie) return t.resolved.lie;
    if (t.resolved.ydAlgebra)
        return std::make_shared<const BraidedLiePresentation>(
            derive_bracket(*t.resolved.ydAlgebra));
    throw StructuralError("target has neither a bracket nor a product to derive one");
}

std::string formatDims(const std::vector<int>& dims) {
    std::ostringstream out;
    int total = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) out << "+";
        out << dims[i];
        total += dims[i];
    }
    out << " = " << total;
    return out.str();
}

std::string hopfRefOf(const Target& t) {
    if (!t.doc.hopfRef.empty()) return t.doc.hopfRef;
    return "builtin:triv(1)";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for twisted Hopf-algebra presentations"};
    app.require_subcommand(1);

    std::string target, asKind, outPath, golden, writeGolden, exampleName;
    bool machine = false;
    int witnessCap = 5;
    int jobs = 1;
    int maxDegree = 3;

    auto addCommon = [&](CLI::App* cmd, bool withDoc) {
        cmd->add_flag("--machine", machine, "line-oriented report for scripts");
        cmd->add_option("--witness-cap", witnessCap, "witnesses kept per axiom");
        cmd->add_option("--jobs", jobs, "run independent checkers concurrently");
        if (withDoc) {
            cmd->add_option("-o,--out", outPath, "write the produced document here");
            cmd->add_option("--golden", golden,
                            "compare the document byte-exactly against this golden file");
            cmd->add_option("--write-golden", writeGolden,
                            "write the document as a golden file");
        }
    };

    auto* verify = app.add_subcommand("verify", "run every applicable axiom checker");
    verify->add_option("target", target, "built-in name or document path")->required();
    verify->add_option("--as", asKind, "check as this kind instead of the document kind");
    addCommon(verify, false);

    auto* report = app.add_subcommand("report", "like verify, but always exits 0");
    report->add_option("target", target)->required();
    report->add_option("--as", asKind);
    addCommon(report, false);

    auto* deriveLie = app.add_subcommand("derive-lie", "derive the braided bracket");
    deriveLie->add_option("target", target)->required();
    addCommon(deriveLie, true);

    auto* center = app.add_subcommand("center", "bracket-central elements");
    center->add_option("target", target)->required();
    addCommon(center, true);

    auto* invariantsCmd = app.add_subcommand("invariants", "counit-action fixed points");
    invariantsCmd->add_option("target", target)->required();
    addCommon(invariantsCmd, true);

    auto* envelope = app.add_subcommand("envelope", "degree-truncated enveloping algebra");
    envelope->add_option("target", target)->required();
    envelope->add_option("--max-degree", maxDegree, "degree window (2..6)");
    addCommon(envelope, true);

    auto* biproductCmd = app.add_subcommand("biproduct",
                                            "endomorphism composite over the module's Hopf algebra");
    biproductCmd->add_option("target", target)->required();
    biproductCmd->add_option("--max-degree", maxDegree, "degree window (2..6)");
    addCommon(biproductCmd, true);

    auto* example = app.add_subcommand("example", "dump a built-in as a document");
    example->add_option("name", exampleName)->required();
    example->add_option("--as", asKind, "dump this facet of the built-in");
    addCommon(example, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed() || report->parsed()) {
            Target t = loadTarget(target);
            std::string kind = asKind.empty() ? t.resolved.kind : asKind;
            Report rep = runSuite(t, kind, witnessCap, jobs);
            printReport(rep, machine);
            if (report->parsed()) return kExitPass;
            return rep.pass() ? kExitPass : kExitFail;
        }

        if (deriveLie->parsed()) {
            Target t = loadTarget(target);
            if (!t.resolved.ydAlgebra)
                throw StructuralError("derive-lie needs a module algebra");
            BraidedLiePresentation lie = derive_bracket(*t.resolved.ydAlgebra);
            std::cout << "bracket relations:\n";
            const auto& B = lie.basis();
            for (int i = 0; i < B->dim(); ++i)
                for (int j = 0; j < B->dim(); ++j) {
                    Tensor value({outAxis(B)});
                    for (const auto& [idx, v] : lie.bracket.entries())
                        if (idx[0] == i && idx[1] == j) value.add({idx[2]}, v);
                    if (!value.isZero())
                        std::cout << "  [" << B->label(i) << "," << B->label(j)
                                  << "] = " << formatElement(value) << "\n";
                }
            Report rep = verify_braided_lie(lie, witnessCap);
            printReport(rep, machine);
            std::string bytes = emitDocument(documentOfLie(lie, hopfRefOf(t)));
            int rc = handleDocOutput(bytes, outPath, golden, writeGolden);
            if (rc != kExitPass) return rc;
            return rep.pass() ? kExitPass : kExitFail;
        }

        if (center->parsed() || invariantsCmd->parsed()) {
            Target t = loadTarget(target);
            Subspace space(1);
            std::string title;
            if (center->parsed()) {
                auto lie = lieOf(t);
                space = homkernel::center(*lie);
                title = "center";
            } else {
                space = homkernel::invariants(moduleOf(t));
                title = "invariants";
            }
            const auto& B = moduleOf(t).basis;
            std::cout << title << " of " << t.resolved.name << ": dimension "
                      << space.dim() << "\n";
            for (const auto& row : space.rows())
                std::cout << "  " << formatElement(qvecToTensor(B, row)) << "\n";
            std::string bytes = emitDocument(
                documentOfSubspace(space, B, title + "(" + t.resolved.name + ")"));
            return handleDocOutput(bytes, outPath, golden, writeGolden);
        }

        if (envelope->parsed()) {
            if (maxDegree < 2 || maxDegree > kMaxDegreeCap)
                throw StructuralError("--max-degree must be between 2 and 6");
            Target t = loadTarget(target);
            auto lie = lieOf(t);
            TruncatedEnveloping u = build_enveloping(lie, maxDegree);
            std::cout << "dims: " << formatDims(u.dimsByDegree) << "\n";
            std::cout << "stabilizer closure: "
                      << (u.stabilizersImplied ? "already implied" : "added relations")
                      << "\n";
            if (quotientDims(*lie, maxDegree, false) !=
                quotientDims(*lie, maxDegree, true))
                throw HomkernelError("quotient dimensions depend on the monomial order");
            Report rep = verify_enveloping_hopf(u, witnessCap);
            printReport(rep, machine);
            std::string bytes = emitDocument(documentOfEnveloping(u, hopfRefOf(t)));
            int rc = handleDocOutput(bytes, outPath, golden, writeGolden);
            if (rc != kExitPass) return rc;
            return rep.pass() ? kExitPass : kExitFail;
        }

        if (biproductCmd->parsed()) {
            if (maxDegree < 2 || maxDegree > kMaxDegreeCap)
                throw StructuralError("--max-degree must be between 2 and 6");
            Target t = loadTarget(target);
            if (!t.resolved.ydModule)
                throw StructuralError("biproduct needs a module over a Hopf presentation");
            EndVPresentation endv = build_endv(t.resolved.ydModule);
            BiproductPresentation bp = build_biproduct(endv, maxDegree);
            std::cout << "factor dims: " << formatDims(bp.factorU->dimsByDegree)
                      << "; composite dimension " << bp.basis()->dim() << "\n";
            Report rep(bp.basis()->name(), witnessCap);
            rep.merge(check_hopf_suite(bp.hopf, true, witnessCap));
            printReport(rep, machine);
            std::string bytes = emitDocument(documentOfBiproduct(bp));
            int rc = handleDocOutput(bytes, outPath, golden, writeGolden);
            if (rc != kExitPass) return rc;
            return rep.pass() ? kExitPass : kExitFail;
        }

        if (example->parsed()) {
            Target t = loadTarget(exampleName);
            if (!t.isBuiltin)
                throw StructuralError("'" + exampleName + "' is not a built-in");
            PresentationDocument doc = t.doc;
            if (!asKind.empty() && asKind != doc.kind) {
                if ((asKind == "hom-hopf" || asKind == "hom-bialgebra" ||
                     asKind == "hom-algebra" || asKind == "hom-coalgebra") &&
                    t.resolved.hopf)
                    doc = documentOfHopf(*t.resolved.hopf, asKind);
                else
                    throw StructuralError("built-in has no '" + asKind + "' facet");
            }
            std::string bytes = emitDocument(doc);
            if (outPath.empty() && golden.empty() && writeGolden.empty())
                std::cout << bytes;
            return handleDocOutput(bytes, outPath, golden, writeGolden);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const HomkernelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitPass;
}
