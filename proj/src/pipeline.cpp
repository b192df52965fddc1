#include "coauthnet/pipeline.hpp"

#include <fstream>

#include "coauthnet/error.hpp"

namespace coauthnet {

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) throw Error("cannot write " + path.string());
}

} // namespace

AnalyzeResult analyze(const Corpus& corpus, const AnalyzeConfig& config) {
    config.layout.validate();
    if (config.out_dir.empty()) throw InputError("no output directory given");

    int from = 0;
    int to = 0;
    if (config.from && config.to) {
        from = *config.from;
        to = *config.to;
    } else {
        if (corpus.publications.publications.empty())
            throw InputError("corpus has no publications; give the year range explicitly");
        const auto bounds = corpus.year_bounds();
        from = config.from.value_or(bounds.from);
        to = config.to.value_or(bounds.to);
    }

    AnalyzeResult result;
    std::vector<ExportDocument> documents;
    for (const auto range : cumulative_ranges(from, to)) {
        auto analysis = analyze_range(corpus, range);
        const auto layout = run_layout(analysis.graph, config.layout);
        const Partition partition = analysis.communities ? analysis.communities->partition : Partition();
        documents.push_back(to_document(analysis.graph, partition, layout.state, corpus, range, analysis.row));
        result.report.rows.push_back(analysis.row);
    }
    result.report.text = render_table(result.report.rows);
    result.report.json = render_json(result.report.rows);

    result.manifest = write_outputs(documents, config.out_dir);
    write_text(config.out_dir / kReportTextFile, result.report.text);
    write_text(config.out_dir / kReportJsonFile, result.report.json);
    return result;
}

AnalyzeResult analyze(const AnalyzeConfig& config) {
    return analyze(load_corpus(config.members, config.papers), config);
}

} // namespace coauthnet
