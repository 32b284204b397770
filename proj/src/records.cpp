#include "codemix/records.hpp"

#include <fstream>

#include "codemix/errors.hpp"
#include "json.hpp"

namespace codemix {

namespace {

using nlohmann::json;

json parse_line(std::string_view line, const char* what) {
    try {
        json j = json::parse(line);
        if (!j.is_object()) throw DataError(std::string(what) + ": record is not an object");
        return j;
    } catch (const json::exception& e) {
        throw DataError(std::string(what) + ": " + e.what());
    }
}

// json::at with a DataError instead of nlohmann's own exception type.
const json& field(const json& j, const char* key, const char* what) {
    const auto it = j.find(key);
    if (it == j.end()) throw DataError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

template <typename T>
T typed_field(const json& j, const char* key, const char* what) {
    try {
        return field(j, key, what).get<T>();
    } catch (const json::exception& e) {
        throw DataError(std::string(what) + ": bad field '" + key + "': " + e.what());
    }
}

json token_to_json(const Token& token) {
    return json::array({token.surface, std::string(to_string(token.script)),
                        token.tag ? json(std::string(to_string(*token.tag))) : json(nullptr)});
}

Token token_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw DataError("token must be a [surface, script, tag] triple");
    Token token;
    token.surface = j[0].get<std::string>();
    if (token.surface.empty()) throw DataError("token surface is empty");
    token.script = script_from_string(j[1].get<std::string>());
    if (!j[2].is_null()) token.tag = language_tag_from_string(j[2].get<std::string>());
    return token;
}

json grid_to_json(const GridSpec& grid) {
    return json{{"alpha", {grid.alpha_low, grid.alpha_high, grid.alpha_step}},
                {"beta", {grid.beta_low, grid.beta_high, grid.beta_step}}};
}

GridSpec grid_from_json(const json& j) {
    GridSpec grid;
    const auto axis = [&](const char* key, double& low, double& high, double& step) {
        const json& a = field(j, key, "fits file grid");
        if (!a.is_array() || a.size() != 3)
            throw DataError(std::string("fits file grid '") + key +
                            "' must be [low, high, step]");
        low = a[0].get<double>();
        high = a[1].get<double>();
        step = a[2].get<double>();
    };
    axis("alpha", grid.alpha_low, grid.alpha_high, grid.alpha_step);
    axis("beta", grid.beta_low, grid.beta_high, grid.beta_step);
    return grid;
}

}  // namespace

std::string tagged_article_to_line(const Article& article) {
    json j{{"id", article.id}, {"source", article.source}, {"chars", article.chars}};
    if (article.title) j["title"] = *article.title;
    if (article.category) j["category"] = *article.category;
    if (article.date) j["date"] = *article.date;
    json spans = json::array();
    for (const Span& span : article.spans) {
        json sentences = json::array();
        for (const Sentence& sentence : span.sentences) {
            json tokens = json::array();
            for (const Token& token : sentence.tokens) tokens.push_back(token_to_json(token));
            json s{{"text", sentence.text}, {"tokens", std::move(tokens)}};
            if (sentence.cmi) s["cmi"] = *sentence.cmi;
            sentences.push_back(std::move(s));
        }
        spans.push_back(json{{"index", span.index},
                             {"eligible", span.eligible},
                             {"sentences", std::move(sentences)}});
    }
    j["spans"] = std::move(spans);
    return j.dump();
}

Article tagged_article_from_line(std::string_view line) {
    const json j = parse_line(line, "tagged article");
    Article article;
    article.id = typed_field<std::string>(j, "id", "tagged article");
    article.source = typed_field<std::string>(j, "source", "tagged article");
    article.chars = typed_field<std::size_t>(j, "chars", "tagged article");
    if (j.contains("title") && !j["title"].is_null())
        article.title = j["title"].get<std::string>();
    if (j.contains("category") && !j["category"].is_null())
        article.category = j["category"].get<std::string>();
    if (j.contains("date") && !j["date"].is_null()) article.date = j["date"].get<std::string>();
    const json& spans = field(j, "spans", "tagged article");
    if (!spans.is_array()) throw DataError("tagged article: 'spans' must be an array");
    try {
        for (const json& span_json : spans) {
            Span span;
            span.index = span_json.at("index").get<std::size_t>();
            span.eligible = span_json.at("eligible").get<bool>();
            for (const json& sentence_json : span_json.at("sentences")) {
                Sentence sentence;
                sentence.text = sentence_json.at("text").get<std::string>();
                for (const json& token_json : sentence_json.at("tokens"))
                    sentence.tokens.push_back(token_from_json(token_json));
                if (sentence.tokens.empty())
                    throw DataError("tagged article: sentence with no tokens");
                if (sentence_json.contains("cmi") && !sentence_json["cmi"].is_null())
                    sentence.cmi = sentence_json["cmi"].get<double>();
                span.sentences.push_back(std::move(sentence));
            }
            if (span.sentences.empty()) throw DataError("tagged article: span with no sentences");
            article.spans.push_back(std::move(span));
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("tagged article: ") + e.what());
    }
    return article;
}

std::string annotation_to_line(const AnnotationRecord& record) {
    return json{{"article_id", record.article_id},
                {"span_index", record.span_index},
                {"label", record.label}}
        .dump();
}

AnnotationRecord annotation_from_line(std::string_view line) {
    const json j = parse_line(line, "annotation");
    AnnotationRecord record;
    record.article_id = typed_field<std::string>(j, "article_id", "annotation");
    record.span_index = typed_field<std::size_t>(j, "span_index", "annotation");
    record.label = typed_field<int>(j, "label", "annotation");
    if (record.label != 0 && record.label != 1)
        throw DataError("annotation: label outside {0,1}");
    return record;
}

namespace {

template <typename Record>
std::vector<Record> read_record_file(const std::string& path, const char* what,
                                     Record (*parse)(std::string_view)) {
    std::ifstream in(path);
    if (!in) throw DataError(std::string("cannot open ") + what + " file: " + path);
    std::vector<Record> records;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        bool blank = true;
        for (const char c : line)
            if (c != ' ' && c != '\t' && c != '\r') {
                blank = false;
                break;
            }
        if (blank) continue;
        try {
            records.push_back(parse(line));
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(line_number) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace

std::vector<AnnotationRecord> read_annotations(const std::string& path) {
    return read_record_file<AnnotationRecord>(path, "annotation", annotation_from_line);
}

std::string prediction_to_line(const SpanPrediction& record) {
    return json{{"article_id", record.article_id},
                {"source", record.source},
                {"span_index", record.span_index},
                {"predicted", record.predicted},
                {"strategy", record.strategy}}
        .dump();
}

SpanPrediction prediction_from_line(std::string_view line) {
    const json j = parse_line(line, "prediction");
    SpanPrediction record;
    record.article_id = typed_field<std::string>(j, "article_id", "prediction");
    record.source = typed_field<std::string>(j, "source", "prediction");
    record.span_index = typed_field<std::size_t>(j, "span_index", "prediction");
    record.predicted = typed_field<int>(j, "predicted", "prediction");
    record.strategy = typed_field<std::string>(j, "strategy", "prediction");
    if (record.predicted != 0 && record.predicted != 1)
        throw DataError("prediction: predicted outside {0,1}");
    return record;
}

std::vector<SpanPrediction> read_predictions(const std::string& path) {
    return read_record_file<SpanPrediction>(path, "prediction", prediction_from_line);
}

std::string span_score_to_line(const std::string& article_id, const SpanScore& score) {
    return json{{"article_id", article_id},
                {"span_index", score.span_index},
                {"sentence_cmis", score.sentence_cmis},
                {"n_cm", score.n_cm},
                {"mr", score.mr},
                {"decision", score.decision}}
        .dump();
}

std::string dataset_record_to_line(const DatasetRecord& record) {
    json thresholds = json::array();
    for (const ThresholdPair& pair : record.thresholds)
        thresholds.push_back(json::array({pair.alpha, pair.beta}));
    return json{{"record", "mct"},
                {"article_id", record.article_id},
                {"source", record.source},
                {"span_index", record.span_index},
                {"text", record.text},
                {"sentence_count", record.sentence_count},
                {"n_cm", record.n_cm},
                {"mr", record.mr},
                {"avg_cmi", record.avg_cmi},
                {"strategy", record.strategy},
                {"thresholds", std::move(thresholds)}}
        .dump();
}

std::string dataset_header_line(std::string_view strategy, std::string_view tagger_id) {
    return json{{"record", "header"},
                {"tool", std::string(kToolName)},
                {"version", std::string(kToolVersion)},
                {"strategy", std::string(strategy)},
                {"tagger", std::string(tagger_id)}}
        .dump();
}

void write_fits_file(const std::string& path, const FitsFile& fits) {
    json fit_array = json::array();
    for (const NamedFit& fit : fits.fits)
        fit_array.push_back(json{{"name", fit.name},
                                 {"alpha", fit.thresholds.alpha},
                                 {"beta", fit.thresholds.beta},
                                 {"accuracy", fit.accuracy},
                                 {"spans", fit.spans}});
    json j{{"tool", std::string(kToolName)},
           {"version", std::string(kToolVersion)},
           {"tagger", fits.tagger_id},
           {"grid", grid_to_json(fits.grid)},
           {"fits", std::move(fit_array)}};
    if (!fits.surfaces.empty()) {
        json surfaces = json::object();
        for (const auto& [name, cells] : fits.surfaces) {
            json rows = json::array();
            for (const GridCell& cell : cells)
                rows.push_back(
                    json::array({cell.thresholds.alpha, cell.thresholds.beta, cell.accuracy}));
            surfaces[name] = std::move(rows);
        }
        j["surfaces"] = std::move(surfaces);
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot open fits file for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw DataError("failed writing fits file: " + path);
}

FitsFile read_fits_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open fits file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("fits file " + path + ": " + e.what());
    }
    FitsFile fits;
    try {
        fits.tagger_id = j.value("tagger", std::string());
        fits.grid = grid_from_json(field(j, "grid", "fits file"));
        for (const json& fit_json : field(j, "fits", "fits file")) {
            NamedFit fit;
            fit.name = fit_json.at("name").get<std::string>();
            fit.thresholds.alpha = fit_json.at("alpha").get<double>();
            fit.thresholds.beta = fit_json.at("beta").get<double>();
            fit.accuracy = fit_json.at("accuracy").get<double>();
            fit.spans = fit_json.value("spans", std::size_t{0});
            fits.fits.push_back(std::move(fit));
        }
        if (j.contains("surfaces")) {
            for (const auto& [name, rows] : j["surfaces"].items()) {
                std::vector<GridCell> cells;
                for (const json& row : rows) {
                    if (!row.is_array() || row.size() != 3)
                        throw DataError("fits file surface row must be [alpha, beta, accuracy]");
                    cells.push_back(GridCell{
                        ThresholdPair{row[0].get<double>(), row[1].get<double>()},
                        row[2].get<double>()});
                }
                fits.surfaces[name] = std::move(cells);
            }
        }
    } catch (const json::exception& e) {
        throw DataError("fits file " + path + ": " + e.what());
    }
    return fits;
}

std::optional<ThresholdPair> find_fit(const FitsFile& fits, std::string_view name) {
    for (const NamedFit& fit : fits.fits)
        if (fit.name == name) return fit.thresholds;
    return std::nullopt;
}

}  // namespace codemix
