#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "framefit/examples.hpp"
#include "framefit/json_io.hpp"
#include "framefit/schur_horn.hpp"
#include "framefit/synthesis.hpp"

namespace {

using framefit::AdmissibilityVerdict;
using framefit::DiagonalOperator;
using framefit::FiniteHermitian;
using framefit::Frame;
using framefit::Json;
using framefit::Mat;
using framefit::OperatorModel;
using framefit::SequenceModel;
using framefit::Status;
using framefit::Vec;

Json load_json(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw framefit::InvalidInput("cannot open input file '" + arg.substr(1) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw framefit::InvalidInput(std::string("malformed JSON input: ") + e.what());
    }
}

Vec load_vec(const std::string& arg) {
    const Json j = load_json(arg);
    if (!j.is_array() || j.empty())
        throw framefit::InvalidInput("expected a non-empty JSON array of numbers");
    Vec v(static_cast<long>(j.size()));
    long i = 0;
    for (const auto& x : j) {
        if (!x.is_number()) throw framefit::InvalidInput("expected a JSON array of numbers");
        v[i++] = x.get<double>();
    }
    return v;
}

void render_text(const Json& j, std::ostream& os, const std::string& prefix) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << prefix << it.key() << ":\n";
                render_text(it.value(), os, prefix + "  ");
            } else {
                os << prefix << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (x.is_object() || x.is_array()) {
                os << prefix << "-\n";
                render_text(x, os, prefix + "  ");
            } else {
                os << prefix << "- " << x.dump() << "\n";
            }
        }
    } else {
        os << prefix << j.dump() << "\n";
    }
}

void emit(const Json& j, const std::string& out, const std::string& format) {
    std::ostringstream body;
    if (format == "text")
        render_text(j, body, "");
    else
        body << j.dump(2) << "\n";
    if (out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out);
        if (!f) throw framefit::InvalidInput("cannot open output file '" + out + "'");
        f << body.str();
    }
}

int status_code(Status s) {
    switch (s) {
        case Status::Admissible: return 0;
        case Status::NotAdmissible: return 1;
        case Status::Undetermined: return 3;
    }
    return 3;
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (long r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frame admissibility and synthesis toolkit"};
    app.require_subcommand(1);

    double tol = framefit::kDefaultTol;
    long horizon = framefit::kDefaultHorizon;
    std::string out, format = "json";
    std::string seq_arg, op_arg, b_arg, c_arg, frame_arg, mode = "finite", name;
    long k = 1, n_vectors = 0, steps = 1;
    double tight_bound = 0.0;
    bool tight_set = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", tol, "comparison tolerance");
        sub->add_option("--horizon", horizon, "k-family check horizon");
        sub->add_option("--out", out, "write the report to this path");
        sub->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* uk = app.add_subcommand("uk", "largest k-term sum of a sequence or operator");
    uk->add_option("--seq", seq_arg, "sequence spec (inline JSON or @file)");
    uk->add_option("--op", op_arg, "operator spec (inline JSON or @file)");
    uk->add_option("--k", k, "subset size")->required();
    add_common(uk);

    CLI::App* lk = app.add_subcommand("lk", "smallest k-term sum of a sequence or operator");
    lk->add_option("--seq", seq_arg, "sequence spec (inline JSON or @file)");
    lk->add_option("--op", op_arg, "operator spec (inline JSON or @file)");
    lk->add_option("--k", k, "subset size")->required();
    add_common(lk);

    CLI::App* maj = app.add_subcommand("majorize", "test whether c is majorized by b");
    maj->add_option("--b", b_arg, "dominating vector (JSON array)")->required();
    maj->add_option("--c", c_arg, "dominated vector (JSON array)")->required();
    add_common(maj);

    CLI::App* sh = app.add_subcommand("schur-horn", "orthogonal conjugation with prescribed diagonal");
    sh->add_option("--b", b_arg, "eigenvalue vector (JSON array)")->required();
    sh->add_option("--c", c_arg, "target diagonal (JSON array)")->required();
    add_common(sh);

    CLI::App* check = app.add_subcommand("check", "admissibility verdict for a pair (S, c)");
    check->add_option("--op", op_arg, "operator spec (inline JSON or @file)");
    check->add_option("--seq", seq_arg, "norm-squared sequence spec")->required();
    check->add_option("--tight", tight_bound, "tight-frame bound A (uses the A*I criterion)");
    add_common(check);

    CLI::App* syn = app.add_subcommand("synthesize", "construct a frame for an admissible pair");
    syn->add_option("--op", op_arg, "operator spec")->required();
    syn->add_option("--seq", seq_arg, "norm-squared sequence spec")->required();
    syn->add_option("--mode", mode, "finite | truncated | head | greedy")
        ->check(CLI::IsMember({"finite", "truncated", "head", "greedy"}));
    syn->add_option("--N", n_vectors, "vector count for truncated mode");
    syn->add_option("--steps", steps, "stage count for greedy mode");
    add_common(syn);

    CLI::App* ver = app.add_subcommand("verify", "verify a frame against a target pair");
    ver->add_option("--frame", frame_arg, "frame file (inline JSON or @file)")->required();
    ver->add_option("--op", op_arg, "operator spec")->required();
    ver->add_option("--c", c_arg, "norm-squared list (JSON array)")->required();
    add_common(ver);

    CLI::App* exc = app.add_subcommand("excess", "excess of a frame");
    exc->add_option("--frame", frame_arg, "frame file (inline JSON or @file)")->required();
    add_common(exc);

    CLI::App* ex = app.add_subcommand("examples", "run a named fixture end to end");
    ex->add_option("name", name, "one of 6.1, 6.2, 6.3, 6.6, 4.8, 6.7")->required();
    add_common(ex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (check->count("--tight") > 0) tight_set = true;

    try {
        if (uk->parsed() || lk->parsed()) {
            const bool lower = lk->parsed();
            framefit::BoundedValue bv;
            if (!seq_arg.empty()) {
                const SequenceModel s = framefit::parse_sequence(load_json(seq_arg));
                bv = lower ? framefit::l_k_seq(s, k) : framefit::u_k_seq(s, k);
            } else if (!op_arg.empty()) {
                const OperatorModel s = framefit::parse_operator(load_json(op_arg));
                bv = lower ? framefit::l_k_op(s, k) : framefit::u_k_op(s, k);
            } else {
                throw framefit::InvalidInput("provide --seq or --op");
            }
            emit({{"k", k}, {"value", bv.value}, {"error", bv.error}}, out, format);
            return 0;
        }
        if (maj->parsed()) {
            const bool ok = framefit::majorizes(load_vec(b_arg), load_vec(c_arg), tol);
            emit({{"majorizes", ok}}, out, format);
            return ok ? 0 : 1;
        }
        if (sh->parsed()) {
            const Vec b = load_vec(b_arg), c = load_vec(c_arg);
            const auto chain = framefit::t_transform_chain(b, c, tol);
            const Mat u = framefit::construct_diagonal_unitary(b, c, tol);
            const Vec diag = (u.transpose() * b.asDiagonal() * u).diagonal();
            Json j;
            j["rotation"] = mat_to_json(u);
            j["diag"] = mat_to_json(diag.transpose())[0];
            j["steps"] = chain.size();
            j["diag_residual"] = (diag - c).cwiseAbs().maxCoeff();
            j["orth_residual"] =
                (u.transpose() * u - Mat::Identity(b.size(), b.size())).cwiseAbs().maxCoeff();
            emit(j, out, format);
            return 0;
        }
        if (check->parsed()) {
            const SequenceModel c = framefit::parse_sequence(load_json(seq_arg));
            AdmissibilityVerdict v;
            if (tight_set) {
                v = framefit::tight_admissible(tight_bound, c, horizon, tol);
            } else {
                if (op_arg.empty()) throw framefit::InvalidInput("provide --op or --tight");
                v = framefit::classify(framefit::parse_operator(load_json(op_arg)), c, horizon, tol);
            }
            emit(framefit::verdict_to_json(v), out, format);
            return status_code(v.status);
        }
        if (syn->parsed()) {
            const OperatorModel op = framefit::parse_operator(load_json(op_arg));
            const SequenceModel c = framefit::parse_sequence(load_json(seq_arg));
            Json j;
            if (mode == "finite" || mode == "truncated") {
                const auto* f = std::get_if<FiniteHermitian>(&op);
                if (!f) throw framefit::InvalidInput("mode " + mode + " needs a finite operator");
                Frame frame = [&] {
                    if (mode == "finite") {
                        if (!c.is_finite())
                            throw framefit::InvalidInput("mode finite needs a finite norm list");
                        return framefit::synthesize_finite(*f, c.head(), tol);
                    }
                    if (n_vectors <= 0)
                        throw framefit::InvalidInput("mode truncated needs --N");
                    return framefit::synthesize_truncated_summable(*f, c, n_vectors, tol);
                }();
                const Vec target = framefit::norms_squared(frame);
                const Vec expected =
                    mode == "finite" ? c.head() : static_cast<Vec>(c.prefix(n_vectors - 1));
                Vec full = target;  // truncated mode: last entry absorbs the tail
                if (mode == "truncated") full.head(n_vectors - 1) = expected;
                const auto report = framefit::verify_pair(frame, *f, full, tol);
                j["frame"] = framefit::frame_to_json(frame);
                j["report"] = framefit::verify_report_to_json(report);
                j["excess"] = framefit::excess(frame, tol);
                emit(j, out, format);
                return report.pass ? 0 : 1;
            }
            const auto* d = std::get_if<DiagonalOperator>(&op);
            if (!d) throw framefit::InvalidInput("mode " + mode + " needs a diagonal operator");
            const auto dec = framefit::head_decompose(*d, c, horizon, tol);
            const auto gr = framefit::greedy_extend(dec, c, mode == "head" ? 1 : steps, horizon, tol);
            j["frame"] = framefit::frame_to_json(gr.frame());
            j["case_id"] = dec.case_id;
            j["n0"] = dec.n0;
            j["h"] = dec.h;
            j["stages_done"] = gr.stages_done;
            j["stopped_early"] = gr.stopped_early;
            j["norms_consumed"] = gr.norms_consumed;
            Json consumed = Json::array();
            for (long cc : gr.consumed_coords) consumed.push_back(cc);
            j["consumed_coords"] = consumed;
            emit(j, out, format);
            return 0;
        }
        if (ver->parsed()) {
            const Frame frame = framefit::parse_frame(load_json(frame_arg));
            const OperatorModel op = framefit::parse_operator(load_json(op_arg));
            const auto* f = std::get_if<FiniteHermitian>(&op);
            if (!f) throw framefit::InvalidInput("verify needs a finite operator");
            const auto report = framefit::verify_pair(frame, *f, load_vec(c_arg), tol);
            emit(framefit::verify_report_to_json(report), out, format);
            return report.pass ? 0 : 1;
        }
        if (exc->parsed()) {
            const Frame frame = framefit::parse_frame(load_json(frame_arg));
            emit({{"excess", framefit::excess(frame, tol)}}, out, format);
            return 0;
        }
        if (ex->parsed()) {
            const auto rep = framefit::run_example(name, horizon, tol);
            Json j;
            j["name"] = rep.name;
            j["expected"] = framefit::to_string(rep.expected);
            j["verdict"] = framefit::verdict_to_json(rep.verdict);
            j["matches_expected"] = rep.matches_expected();
            j["fixture_checks"] = framefit::evidence_to_json(rep.extra);
            if (rep.has_frame) {
                j["frame"] = framefit::frame_to_json(Frame(rep.synthesis));
                j["report"] = framefit::verify_report_to_json(rep.verify);
            }
            emit(j, out, format);
            return rep.matches_expected() && framefit::all_pass(rep.extra) ? 0 : 1;
        }
    } catch (const framefit::NotAdmissibleError& e) {
        std::cerr << "not admissible: " << e.what() << "\n";
        return 1;
    } catch (const framefit::NotMajorized& e) {
        std::cerr << "not majorized: " << e.what() << "\n";
        return 1;
    } catch (const framefit::TruncationInadmissible& e) {
        std::cerr << "truncation inadmissible: " << e.what() << "\n";
        return 1;
    } catch (const framefit::SufficiencyFailed& e) {
        std::cerr << "sufficiency failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
