#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "demo.hpp"
#include "pixelbreak/attacks.hpp"
#include "pixelbreak/corpus.hpp"
#include "pixelbreak/image.hpp"
#include "pixelbreak/keystream.hpp"
#include "pixelbreak/metrics.hpp"
#include "pixelbreak/skk.hpp"
#include "pixelbreak/tanaka.hpp"

namespace {

using namespace pixelbreak;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Shared helpers

struct KeySource {
    std::string hex;
    std::string file;
};

void add_key_options(CLI::App* cmd, KeySource& source, const std::string& flag,
                     const std::string& what) {
    auto* direct = cmd->add_option(flag, source.hex, what + " as 32 hex chars");
    auto* from_file =
        cmd->add_option(flag + "-file", source.file,
                        "file holding " + what + " (32 hex chars + newline)");
    direct->excludes(from_file);
    from_file->excludes(direct);
}

SecretKey resolve_key(const KeySource& source, const std::string& flag) {
    if (!source.hex.empty()) return SecretKey::from_hex(source.hex);
    if (!source.file.empty()) return read_key_file(source.file);
    throw UsageError("either " + flag + " or " + flag + "-file is required");
}

void write_text_file(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot create " + tmp.string());
        out << text;
        if (!out) throw Error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

// out.ppm -> out_07.ppm, used when an attack emits several images.
fs::path numbered_path(const fs::path& path, int index) {
    fs::path result = path.parent_path() / path.stem();
    char suffix[8];
    std::snprintf(suffix, sizeof suffix, "_%02d", index);
    result += suffix;
    result += path.extension();
    return result;
}

fs::path gray_path(const fs::path& path) {
    fs::path result = path.parent_path() / path.stem();
    result += "_gray";
    result += path.extension();
    return result;
}

// ---------------------------------------------------------------------------
// Scheme subcommands

struct SchemeOpts {
    KeySource key;
    std::string input;
    std::string output;
    int block_size = 4;
    bool reversal = false;
    bool shuffle = false;
    bool per_image = false;
    std::uint64_t index = 0;
};

void setup_tanaka(CLI::App& app) {
    auto* tanaka =
        app.add_subcommand("tanaka", "Block-scrambling scheme (keyed "
                                     "component shuffle + optional reversal)");
    tanaka->require_subcommand(1);
    for (const bool decrypt : {false, true}) {
        auto opts = std::make_shared<SchemeOpts>();
        auto* cmd = tanaka->add_subcommand(decrypt ? "decrypt" : "encrypt",
                                           decrypt ? "Invert the scheme"
                                                   : "Apply the scheme");
        add_key_options(cmd, opts->key, "--key", "secret key");
        cmd->add_option("--block-size", opts->block_size, "block size M")
            ->check(CLI::Range(1, 256))
            ->capture_default_str();
        cmd->add_flag("--reversal", opts->reversal,
                      "enable keyed value reversal");
        cmd->add_option("input", opts->input, "input PPM")->required();
        cmd->add_option("output", opts->output, "output PPM")->required();
        cmd->callback([opts, decrypt] {
            const SecretKey seed = resolve_key(opts->key, "--key");
            const TanakaKey key =
                tanaka_keygen(seed, opts->block_size, opts->reversal);
            const Image in = load_ppm_file(opts->input);
            save_ppm_file(opts->output, decrypt ? tanaka_decrypt(in, key)
                                                : tanaka_encrypt(in, key));
        });
    }
}

void setup_skk(CLI::App& app) {
    auto* skk = app.add_subcommand(
        "skk", "Per-pixel scheme (keyed negative-positive transformation + "
               "optional channel shuffle)");
    skk->require_subcommand(1);
    for (const bool decrypt : {false, true}) {
        auto opts = std::make_shared<SchemeOpts>();
        auto* cmd = skk->add_subcommand(decrypt ? "decrypt" : "encrypt",
                                        decrypt ? "Invert the scheme"
                                                : "Apply the scheme");
        add_key_options(cmd, opts->key, "--key", "secret key");
        cmd->add_flag("--shuffle", opts->shuffle,
                      "enable the per-pixel channel shuffle");
        auto* per_image = cmd->add_flag(
            "--per-image", opts->per_image,
            "derive the effective key from (key, --index) instead of using "
            "the key directly");
        cmd->add_option("--index", opts->index, "image ordinal under --per-image")
            ->needs(per_image);
        cmd->add_option("input", opts->input, "input PPM")->required();
        cmd->add_option("output", opts->output, "output PPM")->required();
        cmd->callback([opts, decrypt] {
            const SecretKey base = resolve_key(opts->key, "--key");
            const KeyPolicy policy{
                opts->per_image ? KeyMode::per_image : KeyMode::same_key, base};
            const SkkKey key{policy.seed_for(opts->index), opts->shuffle};
            const Image in = load_ppm_file(opts->input);
            save_ppm_file(opts->output, decrypt ? skk_decrypt(in, key)
                                                : skk_encrypt(in, key));
        });
    }
}

// ---------------------------------------------------------------------------
// Attack subcommands
//
// Attack code never sees key material: the --oracle-* options feed this
// setup helper, which hands the attack an opaque EncryptionOracle.

struct AttackOpts {
    KeySource oracle_key;
    bool oracle_reversal = false;
    bool oracle_shuffle = false;
    int block_size = 4;
    int batch = 0;  // 0 = widest batch the bit depth allows
    int leading_bit = 1;
    bool enumerate_seeds = false;
    bool emit_grayscale = false;
    std::string input;
    std::string output;
    std::string original;
    std::string report;
};

void add_attack_io(CLI::App* cmd, const std::shared_ptr<AttackOpts>& opts) {
    cmd->add_option("input", opts->input, "ciphertext PPM")->required();
    cmd->add_option("output", opts->output, "recovered-image PPM")->required();
    auto* original = cmd->add_option(
        "--original", opts->original,
        "original plaintext, enables comparison metrics in --report");
    cmd->add_option("--report", opts->report, "write an attack report JSON")
        ->needs(original);
}

void maybe_write_report(const AttackOpts& opts, const Image& attacked,
                        std::uint64_t query_count, double wall_ms) {
    if (opts.report.empty()) return;
    const Image original = load_ppm_file(opts.original);
    const AttackReport report =
        make_attack_report(original, attacked, query_count, wall_ms);
    write_text_file(opts.report, report_to_json(report));
}

void setup_attacks(CLI::App& app) {
    auto* attack = app.add_subcommand("attack", "Run an attack on a ciphertext");
    attack->require_subcommand(1);

    {
        auto opts = std::make_shared<AttackOpts>();
        auto* cmd = attack->add_subcommand(
            "tanaka-cpa", "Chosen-plaintext attack on the block scrambler; "
                          "recovers the exact plaintext");
        add_key_options(cmd, opts->oracle_key, "--oracle-key",
                        "oracle's secret key");
        cmd->add_flag("--oracle-reversal", opts->oracle_reversal,
                      "oracle applies value reversal");
        cmd->add_option("--block-size", opts->block_size, "block size M")
            ->check(CLI::Range(1, 256))
            ->capture_default_str();
        cmd->add_option("--batch", opts->batch,
                        "target pixels per helper image (default: widest "
                        "batch the bit depth allows)")
            ->check(CLI::Range(1, 1 << 15));
        add_attack_io(cmd, opts);
        cmd->callback([opts] {
            const SecretKey seed = resolve_key(opts->oracle_key, "--oracle-key");
            const Image cipher = load_ppm_file(opts->input);
            const int batch =
                opts->batch != 0
                    ? opts->batch
                    : std::min(opts->block_size * opts->block_size,
                               tanaka_max_batch(cipher.bit_depth()));
            auto oracle = tanaka_oracle(
                tanaka_keygen(seed, opts->block_size, opts->oracle_reversal));
            const auto start = std::chrono::steady_clock::now();
            const Image attacked =
                tanaka_cpa_attack(cipher, *oracle, opts->block_size, batch);
            const double ms = elapsed_ms(start);
            save_ppm_file(opts->output, attacked);
            maybe_write_report(*opts, attacked, oracle->query_count(), ms);
        });
    }

    {
        auto opts = std::make_shared<AttackOpts>();
        auto* cmd = attack->add_subcommand(
            "skk-cpa", "Chosen-plaintext attack on the per-pixel scheme "
                       "(same-key variant); recovers the exact plaintext");
        add_key_options(cmd, opts->oracle_key, "--oracle-key",
                        "oracle's secret key");
        cmd->add_flag("--oracle-shuffle", opts->oracle_shuffle,
                      "oracle applies the channel shuffle");
        add_attack_io(cmd, opts);
        cmd->callback([opts] {
            const SecretKey seed = resolve_key(opts->oracle_key, "--oracle-key");
            const Image cipher = load_ppm_file(opts->input);
            auto oracle = skk_oracle(SkkKey{seed, opts->oracle_shuffle});
            const auto start = std::chrono::steady_clock::now();
            const Image helper = skk_helper_image(
                cipher.width(), cipher.height(), cipher.bit_depth());
            const Image attacked =
                skk_cpa_attack(cipher, oracle->query(helper), SkkSentinels{});
            const double ms = elapsed_ms(start);
            save_ppm_file(opts->output, attacked);
            maybe_write_report(*opts, attacked, oracle->query_count(), ms);
        });
    }

    {
        auto opts = std::make_shared<AttackOpts>();
        auto* cmd = attack->add_subcommand(
            "skk-coa-basic", "Ciphertext-only attack: force every channel's "
                             "leading bit");
        cmd->add_option("--leading-bit", opts->leading_bit,
                        "leading bit all channels are forced to")
            ->required()
            ->check(CLI::Range(0, 1));
        add_attack_io(cmd, opts);
        cmd->callback([opts] {
            const Image cipher = load_ppm_file(opts->input);
            const auto start = std::chrono::steady_clock::now();
            const Image attacked = skk_basic_coa(cipher, opts->leading_bit);
            const double ms = elapsed_ms(start);
            save_ppm_file(opts->output, attacked);
            if (opts->emit_grayscale) {
                save_ppm_file(gray_path(opts->output), to_grayscale(attacked));
            }
            maybe_write_report(*opts, attacked, 0, ms);
        });
    }

    {
        auto opts = std::make_shared<AttackOpts>();
        auto* cmd = attack->add_subcommand(
            "skk-coa-adv", "Ciphertext-only attack: per-pixel candidate "
                           "minimizing the channel L1 gradient to its "
                           "decrypted neighbor");
        cmd->add_flag("--enumerate-seeds", opts->enumerate_seeds,
                      "emit all 48 decryptions, one per candidate state of "
                      "the first pixel (output files get _00.._47 suffixes)");
        cmd->add_flag("--emit-grayscale", opts->emit_grayscale,
                      "also write grayscale versions of the outputs");
        add_attack_io(cmd, opts);
        cmd->callback([opts] {
            const Image cipher = load_ppm_file(opts->input);
            const auto start = std::chrono::steady_clock::now();
            const auto outputs = skk_advanced_coa(
                cipher, opts->enumerate_seeds ? SeedStrategy::enumerate_48
                                              : SeedStrategy::fix_first);
            const double ms = elapsed_ms(start);
            if (opts->enumerate_seeds) {
                for (std::size_t i = 0; i < outputs.size(); ++i) {
                    const fs::path path =
                        numbered_path(opts->output, static_cast<int>(i));
                    save_ppm_file(path, outputs[i]);
                    if (opts->emit_grayscale) {
                        save_ppm_file(gray_path(path),
                                      to_grayscale(outputs[i]));
                    }
                }
            } else {
                save_ppm_file(opts->output, outputs.front());
                if (opts->emit_grayscale) {
                    save_ppm_file(gray_path(opts->output),
                                  to_grayscale(outputs.front()));
                }
            }
            // With --enumerate-seeds the report covers output 00, whose seed
            // is the identity option — the same image fix-first produces.
            maybe_write_report(*opts, outputs.front(), 0, ms);
        });
    }
}

// ---------------------------------------------------------------------------
// Metrics, demo, batch

void setup_metrics(CLI::App& app) {
    struct MetricsOpts {
        std::string reference;
        std::string candidate;
        std::string report;
    };
    auto opts = std::make_shared<MetricsOpts>();
    auto* cmd = app.add_subcommand(
        "metrics", "Compare a candidate image against a reference");
    cmd->add_option("reference", opts->reference, "reference PPM")->required();
    cmd->add_option("candidate", opts->candidate, "candidate PPM")->required();
    cmd->add_option("--report", opts->report,
                    "write the report JSON here instead of stdout");
    cmd->callback([opts] {
        const Image reference = load_ppm_file(opts->reference);
        const Image candidate = load_ppm_file(opts->candidate);
        const AttackReport report =
            make_attack_report(reference, candidate, 0, 0.0);
        const std::string json = report_to_json(report);
        if (opts->report.empty()) {
            std::cout << json;
        } else {
            write_text_file(opts->report, json);
        }
    });
}

void setup_demo(CLI::App& app) {
    struct DemoOpts {
        std::string figure;
        std::string outdir;
    };
    auto opts = std::make_shared<DemoOpts>();
    auto* cmd = app.add_subcommand(
        "demo", "Regenerate a figure's panels from the bundled corpus");
    cmd->add_option("--figure", opts->figure, "figure id")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "fig6",
                               "fig7", "fig8"}));
    cmd->add_option("--outdir", opts->outdir, "output directory")->required();
    cmd->callback([opts] {
        run_demo(opts->figure, opts->outdir, corpus_seed_from_env());
    });
}

void setup_batch(CLI::App& app) {
    struct BatchOpts {
        std::string manifest;
        std::string attack;
        std::string outdir;
        std::string csv;
        int leading_bit = 1;
    };
    auto opts = std::make_shared<BatchOpts>();
    auto* cmd = app.add_subcommand(
        "batch", "Run a ciphertext-only attack over a manifest of images and "
                 "emit a CSV report");
    cmd->add_option("--manifest", opts->manifest,
                    "text file, one `ciphertext.ppm[,original.ppm]` per line")
        ->required();
    cmd->add_option("--attack", opts->attack, "attack to run")
        ->required()
        ->check(CLI::IsMember({"skk-coa-basic", "skk-coa-adv"}));
    cmd->add_option("--leading-bit", opts->leading_bit,
                    "leading bit for skk-coa-basic")
        ->check(CLI::Range(0, 1))
        ->capture_default_str();
    cmd->add_option("--outdir", opts->outdir, "directory for attack outputs")
        ->required();
    cmd->add_option("--csv", opts->csv,
                    "write the CSV here instead of stdout");
    cmd->callback([opts] {
        std::ifstream manifest(opts->manifest);
        if (!manifest) {
            throw Error("cannot open manifest " + opts->manifest);
        }
        fs::create_directories(opts->outdir);

        std::string csv = report_csv_header();
        std::string line;
        while (std::getline(manifest, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto comma = line.find(',');
            const std::string cipher_path = line.substr(0, comma);
            const std::string original_path =
                comma == std::string::npos ? "" : line.substr(comma + 1);

            const Image cipher = load_ppm_file(cipher_path);
            const auto start = std::chrono::steady_clock::now();
            const Image attacked =
                opts->attack == "skk-coa-basic"
                    ? skk_basic_coa(cipher, opts->leading_bit)
                    : skk_advanced_coa(cipher, SeedStrategy::fix_first)
                          .front();
            const double ms = elapsed_ms(start);

            const std::string stem = fs::path(cipher_path).stem().string();
            save_ppm_file(
                fs::path(opts->outdir) / (stem + "_" + opts->attack + ".ppm"),
                attacked);

            if (!original_path.empty()) {
                const AttackReport report = make_attack_report(
                    load_ppm_file(original_path), attacked, 0, ms);
                csv += report_csv_row(stem, opts->attack, report);
            } else {
                // No reference image: comparison columns stay empty.
                std::ostringstream row;
                row << stem << ',' << opts->attack << ",,,,"
                    << gradient_energy(attacked) << ",0,";
                row.setf(std::ios::fixed);
                row.precision(3);
                row << ms << '\n';
                csv += row.str();
            }
        }
        if (opts->csv.empty()) {
            std::cout << csv;
        } else {
            write_text_file(opts->csv, csv);
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "pixelbreak — two perceptual image-encryption schemes for "
        "privacy-preserving deep learning, the attacks that break them, and "
        "the metrics to prove it"};
    app.require_subcommand(1);

    setup_tanaka(app);
    setup_skk(app);
    setup_attacks(app);
    setup_metrics(app);
    setup_demo(app);
    setup_batch(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "pixelbreak: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pixelbreak: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
