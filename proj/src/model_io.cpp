#include <fstream>
#include <sstream>
#include <string>

#include "garchfit/errors.hpp"
#include "garchfit/io.hpp"
#include "garchfit/mlp.hpp"

namespace garchfit {

namespace {

constexpr const char* kMagic = "garchfit-model";
constexpr const char* kVersion = "v1";

/// Token reader that reports the field path of the first failure.
class TokenReader {
public:
    explicit TokenReader(std::istream& in, std::string file) : in_(in), file_(std::move(file)) {}

    std::string word(const std::string& field) {
        std::string token;
        if (!(in_ >> token)) throw FormatError(file_ + ": truncated at field '" + field + "'");
        return token;
    }

    void expect(const std::string& literal, const std::string& field) {
        const std::string token = word(field);
        if (token != literal) {
            throw FormatError(file_ + ": field '" + field + "': expected '" + literal + "', got '" +
                              token + "'");
        }
    }

    long long integer(const std::string& field) {
        const std::string token = word(field);
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            return v;
        } catch (const std::exception&) {
            throw FormatError(file_ + ": field '" + field + "': not an integer: '" + token + "'");
        }
    }

    double number(const std::string& field) {
        const std::string token = word(field);
        try {
            std::size_t pos = 0;
            const double v = std::stod(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            return v;
        } catch (const std::exception&) {
            throw FormatError(file_ + ": field '" + field + "': not a number: '" + token + "'");
        }
    }

private:
    std::istream& in_;
    std::string file_;
};

}  // namespace

void save_model(const MlpModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");

    out << kMagic << ' ' << kVersion << "\n";
    out << "kind " << to_string(model.meta.kind) << "\n";
    out << "seed " << model.meta.seed << "\n";
    out << "best_epoch " << model.meta.best_epoch << "\n";
    out << "input_dim " << model.arch.input_dim << "\n";
    out << "hidden_dims " << model.arch.hidden_dims.size();
    for (int d : model.arch.hidden_dims) out << ' ' << d;
    out << "\n";
    out << "output_dim " << model.arch.output_dim << "\n";
    const auto scaler_line = [&](const char* name, const MinMaxColumn& c) {
        out << "scaler " << name << ' ' << format_g17(c.min) << ' ' << format_g17(c.max) << "\n";
    };
    scaler_line("f1", model.scaler.features[0]);
    scaler_line("f2", model.scaler.features[1]);
    scaler_line("f3", model.scaler.features[2]);
    scaler_line("target", model.scaler.target);
    out << "layers " << model.weights.size() << "\n";
    for (std::size_t h = 0; h < model.weights.size(); ++h) {
        const Eigen::MatrixXd& w = model.weights[h];
        out << "layer " << h << ' ' << w.rows() << ' ' << w.cols() << "\n";
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            for (Eigen::Index c = 0; c < w.cols(); ++c) {
                out << format_g17(w(r, c)) << (c + 1 < w.cols() ? ' ' : '\n');
            }
        }
    }
    out << "end\n";
    if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

MlpModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
    TokenReader r(in, path.string());

    r.expect(kMagic, "magic");
    const std::string version = r.word("version");
    if (version != kVersion) {
        throw FormatError(path.string() + ": unsupported model version '" + version +
                          "' (this build reads " + kVersion + ")");
    }

    MlpModel model;
    r.expect("kind", "kind");
    model.meta.kind = parse_kind(r.word("kind value"));
    r.expect("seed", "seed");
    model.meta.seed = static_cast<std::uint64_t>(r.integer("seed value"));
    r.expect("best_epoch", "best_epoch");
    model.meta.best_epoch = static_cast<int>(r.integer("best_epoch value"));
    r.expect("input_dim", "input_dim");
    model.arch.input_dim = static_cast<int>(r.integer("input_dim value"));
    r.expect("hidden_dims", "hidden_dims");
    const long long n_hidden = r.integer("hidden_dims count");
    if (n_hidden < 0 || n_hidden > 64) {
        throw FormatError(path.string() + ": implausible hidden_dims count " +
                          std::to_string(n_hidden));
    }
    model.arch.hidden_dims.clear();
    for (long long i = 0; i < n_hidden; ++i) {
        model.arch.hidden_dims.push_back(
            static_cast<int>(r.integer("hidden_dims[" + std::to_string(i) + "]")));
    }
    r.expect("output_dim", "output_dim");
    model.arch.output_dim = static_cast<int>(r.integer("output_dim value"));

    const auto scaler_entry = [&](const char* name, MinMaxColumn& c) {
        r.expect("scaler", std::string("scaler ") + name);
        r.expect(name, std::string("scaler ") + name + " label");
        c.min = r.number(std::string("scaler ") + name + " min");
        c.max = r.number(std::string("scaler ") + name + " max");
    };
    scaler_entry("f1", model.scaler.features[0]);
    scaler_entry("f2", model.scaler.features[1]);
    scaler_entry("f3", model.scaler.features[2]);
    scaler_entry("target", model.scaler.target);

    r.expect("layers", "layers");
    const long long n_layers = r.integer("layers count");
    if (n_layers != static_cast<long long>(model.arch.hidden_dims.size()) + 1) {
        throw FormatError(path.string() + ": layers count " + std::to_string(n_layers) +
                          " does not match architecture");
    }
    for (long long h = 0; h < n_layers; ++h) {
        const std::string where = "layer " + std::to_string(h);
        r.expect("layer", where);
        if (r.integer(where + " index") != h) throw FormatError(path.string() + ": " + where + ": bad index");
        const long long rows = r.integer(where + " rows");
        const long long cols = r.integer(where + " cols");
        if (rows < 2 || cols < 1 || rows > 1 << 20 || cols > 1 << 20) {
            throw FormatError(path.string() + ": " + where + ": implausible shape " +
                              std::to_string(rows) + "x" + std::to_string(cols));
        }
        Eigen::MatrixXd w(rows, cols);
        for (long long rr = 0; rr < rows; ++rr) {
            for (long long cc = 0; cc < cols; ++cc) {
                w(rr, cc) = r.number(where + " weight (" + std::to_string(rr) + "," +
                                     std::to_string(cc) + ")");
            }
        }
        model.weights.push_back(std::move(w));
    }
    r.expect("end", "end marker");

    // Re-validate shape chaining; a hand-edited file must not crash forward().
    const auto dims = [&] {
        std::vector<int> d{model.arch.input_dim};
        d.insert(d.end(), model.arch.hidden_dims.begin(), model.arch.hidden_dims.end());
        d.push_back(model.arch.output_dim);
        return d;
    }();
    for (std::size_t h = 0; h + 1 < dims.size(); ++h) {
        if (model.weights[h].rows() != dims[h] + 1 || model.weights[h].cols() != dims[h + 1]) {
            throw FormatError(path.string() + ": layer " + std::to_string(h) +
                              " shape does not chain with architecture");
        }
    }
    return model;
}

void write_trace_csv(const TrainingTrace& trace, const std::filesystem::path& path,
                     const std::string& provenance) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    if (!provenance.empty()) out << "# " << provenance << "\n";
    out << "epoch,train_msd,validation_msd\n";
    for (const EpochRecord& rec : trace) {
        out << rec.epoch << ',' << format_g17(rec.train_msd) << ','
            << format_g17(rec.validation_msd) << "\n";
    }
    if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

}  // namespace garchfit
