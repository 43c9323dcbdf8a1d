#include <iostream>

#include <CLI11.hpp>

#include "leonard/census.hpp"
#include "leonard/io.hpp"
#include "leonard/sampling.hpp"

using namespace leonard;

namespace {

// exit codes: 0 ok, 1 malformed input, 2 domain error
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field parse_field_flag(const std::string& text) {
    if (text == "Q" || text == "q") return Field::rationals();
    if (text.rfind("p=", 0) == 0) return Field::prime(std::stoul(text.substr(2)));
    throw DomainError("field must be Q or p=<odd prime>, got: " + text);
}

std::string scalars_line(const std::vector<Scalar>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out + "]";
}

ParameterArray need_array(const Document& doc) {
    if (const auto* p = std::get_if<ParameterArray>(&doc.payload)) return *p;
    if (const auto* t = std::get_if<TddSequence>(&doc.payload)) {
        TddToArraysResult r = parameter_arrays_from_tdd(*t);
        if (r.status != TddToArraysResult::Status::Ok)
            throw DomainError("TD/D sequence has no parameter array: " + r.detail);
        return r.arrays.front();
    }
    throw DomainError("need a parameter_array (or tdd) document, got " + doc.kind());
}

TddSequence need_tdd(const Document& doc) {
    if (const auto* t = std::get_if<TddSequence>(&doc.payload)) return *t;
    if (const auto* p = std::get_if<ParameterArray>(&doc.payload)) {
        if (!validate_parameter_array(*p).valid)
            throw DomainError("parameter array is not valid; run `validate` for the report");
        return tdd_from_parameter_array(*p);
    }
    throw DomainError("need a tdd (or parameter_array) document, got " + doc.kind());
}

MatrixPair need_pair(const Document& doc) {
    if (const auto* m = std::get_if<MatrixPair>(&doc.payload)) return *m;
    if (std::holds_alternative<TddSequence>(doc.payload) ||
        std::holds_alternative<ParameterArray>(doc.payload))
        return realize_matrices(need_tdd(doc));
    if (const auto* pd = std::get_if<PrimaryData>(&doc.payload))
        return realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(*pd)));
    throw DomainError("need a matrix_pair document, got " + doc.kind());
}

int cmd_validate(const std::string& path) {
    Document doc = parse_document_file(path);
    const auto* p = std::get_if<ParameterArray>(&doc.payload);
    if (!p) throw DomainError("validate needs a parameter_array document, got " + doc.kind());
    ValidationReport rep = validate_parameter_array(*p);
    std::cout << "valid: " << (rep.valid ? "true" : "false") << "\n";
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    if (rep.beta) {
        std::cout << "beta: " << rep.beta->str() << "\n";
        if (rep.valid) std::cout << "type: " << type_tag_name(fundamental_type(*p).tag) << "\n";
    }
    return 0;
}

int cmd_tdd(const std::string& path) {
    Document doc = parse_document_file(path);
    std::cout << render_document(make_document(need_tdd(doc)));
    return 0;
}

int cmd_array(const std::string& path) {
    Document doc = parse_document_file(path);
    const auto* t = std::get_if<TddSequence>(&doc.payload);
    if (!t) throw DomainError("array needs a tdd document, got " + doc.kind());
    TddToArraysResult r = parameter_arrays_from_tdd(*t);
    if (r.status == TddToArraysResult::Status::NotSplitOverField)
        throw DomainError("not split over the field: " + r.detail);
    if (r.status == TddToArraysResult::Status::NotLeonard)
        throw DomainError("not a TD/D sequence of a Leonard pair: " + r.detail);
    std::cout << "count: " << r.arrays.size() << "\n";
    for (const auto& arr : r.arrays) std::cout << render_document(make_document(arr));
    return 0;
}

int cmd_realize(const std::string& path) {
    Document doc = parse_document_file(path);
    std::cout << render_document(make_document(realize_matrices(need_tdd(doc))));
    return 0;
}

int cmd_verify(const std::string& path) {
    Document doc = parse_document_file(path);
    VerificationReport rep = verify_leonard_pair(need_pair(doc));
    switch (rep.status) {
        case VerificationReport::Status::LeonardPair: std::cout << "result: LeonardPair\n"; break;
        case VerificationReport::Status::NotLeonard: std::cout << "result: NotLeonard\n"; break;
        case VerificationReport::Status::NotSplitOverField:
            std::cout << "result: NotSplitOverField\n";
            break;
    }
    if (!rep.reason.empty()) std::cout << "reason: " << rep.reason << "\n";
    if (rep.ok()) {
        std::cout << "theta_order: " << scalars_line(rep.theta_order) << "\n";
        std::cout << "theta_star_order: " << scalars_line(rep.theta_star_order) << "\n";
    }
    return 0;
}

int cmd_flat(const std::string& path) {
    Document doc = parse_document_file(path);
    MatrixPair pair = need_pair(doc);
    VerificationReport rep = verify_leonard_pair(pair);
    if (!rep.ok()) throw DomainError("not a Leonard pair: " + rep.reason);
    FlatPartResult fl = flat_part(pair);
    if (!fl.ok()) throw DomainError("A* spectrum does not split over the field");
    auto [a_seq, x_seq] = trace_data(pair, rep.theta_star_order);
    BipartiteStatus st = bipartite_status(TddSequence(a_seq, x_seq, rep.theta_star_order));
    std::cout << "bipartite: " << (st.bipartite ? "true" : "false") << "\n";
    std::cout << "essentially_bipartite: " << (st.essentially_bipartite ? "true" : "false")
              << "\n";
    if (st.alpha) std::cout << "alpha: " << st.alpha->str() << "\n";
    std::cout << "theta_star_order: " << scalars_line(rep.theta_star_order) << "\n";
    std::cout << "flat_diagonal: " << scalars_line(a_seq) << "\n";
    const ExactMatrix& flat = fl.part->flat;
    for (int i = 0; i < flat.dim(); ++i) {
        std::vector<Scalar> row;
        for (int j = 0; j < flat.dim(); ++j) row.push_back(flat.at(i, j));
        std::cout << "flat_row: " << scalars_line(row) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& path) {
    Document doc = parse_document_file(path);
    if (doc.d >= 3) {
        ParameterArray p = [&] {
            if (const auto* pd = std::get_if<PrimaryData>(&doc.payload))
                return parameter_array_from_primary_data(*pd);
            return need_array(doc);
        }();
        if (!validate_parameter_array(p).valid)
            throw DomainError("not a valid parameter array; run `validate` for the report");
        NearBipartiteClassification cls = classify_near_bipartite(p);
        std::cout << "near_bipartite: " << (cls.near_bipartite ? "true" : "false") << "\n";
        std::string reasons;
        for (size_t i = 0; i < cls.reasons.size(); ++i)
            reasons += (i ? "," : "") + nb_reason_name(cls.reasons[i]);
        std::cout << "reasons: [" << reasons << "]\n";
        if (cls.no_q_in_field) std::cout << "no_q_in_field: true\n";
        if (cls.mu_prime_not_in_field) std::cout << "mu_prime_not_in_field: true\n";
        if (cls.contraction) std::cout << render_document(make_document(*cls.contraction));
        else if (cls.contraction_tdd)
            std::cout << render_document(make_document(*cls.contraction_tdd));
        return 0;
    }
    TddSequence t = need_tdd(doc);
    if (t.d() == 1) {
        ClassificationD1 c = leonard_d1(t.a[0], t.a[1], t.x[0], t.theta_star[0], t.theta_star[1]);
        std::cout << "leonard: " << (c.leonard ? "true" : "false") << "\n";
        std::cout << "bipartite: " << (c.bipartite ? "true" : "false") << "\n";
        std::cout << "essentially_bipartite: " << (c.essentially_bipartite ? "true" : "false")
                  << "\n";
        std::cout << "near_bipartite: " << (c.near_bipartite ? "true" : "false") << "\n";
    } else {
        ClassificationD2 c = leonard_d2({t.a[0], t.a[1], t.a[2]}, {t.x[0], t.x[1]},
                                        {t.theta_star[0], t.theta_star[1], t.theta_star[2]});
        std::cout << "leonard: " << (c.leonard ? "true" : "false") << "\n";
        std::cout << "bipartite: " << (c.bipartite ? "true" : "false") << "\n";
        std::cout << "essentially_bipartite: " << (c.essentially_bipartite ? "true" : "false")
                  << "\n";
        std::cout << "near_bipartite: "
                  << (c.near_bipartite ? (*c.near_bipartite ? "true" : "false") : "n/a") << "\n";
    }
    return 0;
}

int cmd_contract(const std::string& path) {
    Document doc = parse_document_file(path);
    if (const auto* pd = std::get_if<PrimaryData>(&doc.payload)) {
        SpecialTypeFlags fl = special_type_flags(*pd);
        if (!fl.dual_q_krawtchouk && !fl.krawtchouk)
            throw DomainError("primary data is neither dual q-Krawtchouk nor Krawtchouk");
        TypedContractionResult r =
            fl.dual_q_krawtchouk ? contract_dual_q_krawtchouk(*pd) : contract_krawtchouk(*pd);
        switch (r.status) {
            case TypedContractionResult::Status::Contracted:
                std::cout << "status: Contracted\n";
                std::cout << render_document(make_document(*r.array));
                return 0;
            case TypedContractionResult::Status::NotReinforced:
                std::cout << "status: NotReinforced\n";
                std::cout << "contraction: none\n";
                return 0;
            case TypedContractionResult::Status::MuPrimeNotInField:
                std::cout << "status: MuPrimeNotInField\n";
                std::cout << render_document(make_document(*r.tdd_fallback));
                return 0;
        }
    }
    MatrixPair pair = need_pair(doc);
    BipartiteContractionResult r = bipartite_contraction(pair);
    switch (r.status) {
        case BipartiteContractionResult::Status::Contracted:
            std::cout << "status: Contracted\n";
            std::cout << render_document(make_document(*r.array));
            std::cout << render_document(make_document(*r.pair));
            return 0;
        case BipartiteContractionResult::Status::InputNotLeonard:
            throw DomainError("input is not a Leonard pair: " + r.detail);
        case BipartiteContractionResult::Status::SpectrumNotInField:
            std::cout << "status: SpectrumNotInField\n";
            break;
        case BipartiteContractionResult::Status::RepeatedEigenvalue:
            std::cout << "status: RepeatedEigenvalue\n";
            break;
        case BipartiteContractionResult::Status::NotTridiagonal:
            std::cout << "status: NotTridiagonal\n";
            break;
    }
    std::cout << "contraction: none\n";
    if (!r.detail.empty()) std::cout << "detail: " << r.detail << "\n";
    return 0;
}

int cmd_expand(const std::string& path, const std::string& delta_text,
               const std::string& mu_text, const std::string& tau_sign) {
    Document doc = parse_document_file(path);
    const auto* pd = std::get_if<PrimaryData>(&doc.payload);
    if (!pd) throw DomainError("expand needs a primary_data document, got " + doc.kind());
    Scalar delta = Scalar::parse(doc.field, delta_text);
    Scalar mu = Scalar::parse(doc.field, mu_text);
    SpecialTypeFlags fl = special_type_flags(*pd);
    if (fl.dual_q_krawtchouk && fl.bipartite) {
        DualQExpansionResult r = expand_dual_q_krawtchouk(*pd, delta, mu);
        switch (r.status) {
            case DualQExpansionResult::Status::MuZero: throw DomainError("mu must be nonzero");
            case DualQExpansionResult::Status::MuForbidden:
                throw DomainError("mu hits the forbidden value sqrt(-1) mu' q^i at i=" +
                                  std::to_string(r.forbidden_index));
            case DualQExpansionResult::Status::Ok:
                std::cout << "status: Ok\n";
                std::cout << render_document(make_document(*r.pd));
                std::cout << render_document(make_document(*r.array));
                std::cout << render_document(make_document(*r.matrices));
                return 0;
        }
    }
    if (fl.krawtchouk && fl.bipartite) {
        KrawtchoukExpansionResult r = expand_krawtchouk(*pd, delta, mu);
        switch (r.status) {
            case KrawtchoukExpansionResult::Status::MuZero:
                throw DomainError("mu must be nonzero");
            case KrawtchoukExpansionResult::Status::NoTauInField:
                throw DomainError("no tau in the field with 4 tau^2 = (mu^2 - mu'^2) mu*^2");
            case KrawtchoukExpansionResult::Status::Ok: break;
        }
        std::cout << "status: Ok\n";
        for (const auto& item : r.items) {
            if (tau_sign == "+" && item.tau != r.items.back().tau) continue;
            if (tau_sign == "-" && item.tau != r.items.front().tau) continue;
            std::cout << "tau: " << item.tau.str() << "\n";
            std::cout << render_document(make_document(item.pd));
            std::cout << render_document(make_document(item.array));
            std::cout << render_document(make_document(item.matrices));
        }
        return 0;
    }
    throw DomainError("expand needs bipartite primary data of dual q-Krawtchouk or Krawtchouk type");
}

int cmd_sample(const std::string& family, int d, const std::string& field_text, int count,
               std::uint64_t seed, const std::string& q_text) {
    Field f = parse_field_flag(field_text);
    SampleFamily fam = sample_family_from_name(family);
    std::optional<Scalar> q;
    if (!q_text.empty()) q = Scalar::parse(f, q_text);
    auto samples = sample_primary_family(fam, d, f, count, seed, q);
    // NDJSON: one compact document per line for scripting
    for (const auto& pd : samples)
        std::cout << render_document_compact(make_document(pd)) << "\n";
    return 0;
}

int cmd_census(int d, const std::string& field_text) {
    Field f = parse_field_flag(field_text);
    if (!f.is_prime_field()) throw DomainError("census sweeps need a prime field (p=<prime>)");
    CensusResult r = d == 1 ? census_d1(f.modulus()) : census_d2(f.modulus());
    std::cout << "tuples: " << r.tuples << "\n";
    std::cout << "mismatches: " << r.mismatches << "\n";
    for (const auto& e : r.examples) std::cout << "mismatch: " << e << "\n";
    return r.mismatches == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, verification and classification of Leonard pairs"};
    app.require_subcommand(1);

    std::string path, delta_text, mu_text, tau_sign, family, field_text = "Q", q_text;
    int d = 3, count = 1;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "parameter-array decision procedure");
    validate->add_option("file", path)->required();
    auto* tdd = app.add_subcommand("tdd", "parameter array -> TD/D sequence");
    tdd->add_option("file", path)->required();
    auto* array = app.add_subcommand("array", "TD/D sequence -> parameter array(s)");
    array->add_option("file", path)->required();
    auto* realize = app.add_subcommand("realize", "emit the normalized matrix pair");
    realize->add_option("file", path)->required();
    auto* verify = app.add_subcommand("verify", "brute-force Leonard-pair check");
    verify->add_option("file", path)->required();
    auto* flat = app.add_subcommand("flat", "flat part and bipartite status");
    flat->add_option("file", path)->required();
    auto* classify = app.add_subcommand("classify", "near-bipartite classification");
    classify->add_option("file", path)->required();
    auto* contract = app.add_subcommand("contract", "bipartite contraction, all routes");
    contract->add_option("file", path)->required();
    auto* expand = app.add_subcommand("expand", "near-bipartite expansions of a bipartite pair");
    expand->add_option("file", path)->required();
    expand->add_option("--delta", delta_text)->required();
    expand->add_option("--mu", mu_text)->required();
    expand->add_option("--tau-sign", tau_sign)->check(CLI::IsMember({"+", "-"}));
    auto* sample = app.add_subcommand("sample", "deterministic valid primary-data generator");
    sample->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"krawtchouk", "dualq", "essbip-I", "essbip-II", "essbip-III+"}));
    sample->add_option("--d", d)->required();
    sample->add_option("--field", field_text)->required();
    sample->add_option("--count", count)->required();
    sample->add_option("--seed", seed)->required();
    sample->add_option("--q", q_text);
    auto* census1 = app.add_subcommand("census-d1", "exhaustive d=1 predicate-vs-oracle sweep");
    census1->add_option("--field", field_text)->required();
    auto* census2 = app.add_subcommand("census-d2", "exhaustive d=2 predicate-vs-oracle sweep");
    census2->add_option("--field", field_text)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (tdd->parsed()) return cmd_tdd(path);
        if (array->parsed()) return cmd_array(path);
        if (realize->parsed()) return cmd_realize(path);
        if (verify->parsed()) return cmd_verify(path);
        if (flat->parsed()) return cmd_flat(path);
        if (classify->parsed()) return cmd_classify(path);
        if (contract->parsed()) return cmd_contract(path);
        if (expand->parsed()) return cmd_expand(path, delta_text, mu_text, tau_sign);
        if (sample->parsed()) return cmd_sample(family, d, field_text, count, seed, q_text);
        if (census1->parsed()) return cmd_census(1, field_text);
        if (census2->parsed()) return cmd_census(2, field_text);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrimaryDataInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
