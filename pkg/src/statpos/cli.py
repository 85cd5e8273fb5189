"""Command-line interface: train, tag, eval and probe subcommands."""

import argparse
import sys

from . import corpus as corpus_io
from . import counts as counts_mod
from . import evaluation, taggers
from .counts import SmoothingConfig, UNIFORM_OPEN_CLASS
from .errors import EmptyLine, StatposError
from .tagset import Tagset, default_tagset


def _smoothing_args(parser):
    parser.add_argument("--alpha", type=float, default=0.001,
                        help="additive smoothing constant (0 disables smoothing)")
    parser.add_argument("--lambdas", default="0.6,0.3,0.1",
                        help="trigram interpolation weights l3,l2,l1")
    parser.add_argument("--unknown-policy", default="open-class",
                        help="'open-class' or a tag label to force on unknown words")


def _smoothing_from(args):
    try:
        l3, l2, l1 = (float(x) for x in args.lambdas.split(","))
    except ValueError:
        raise StatposError(f"bad --lambdas value {args.lambdas!r}")
    policy = UNIFORM_OPEN_CLASS if args.unknown_policy == "open-class" else args.unknown_policy
    return SmoothingConfig(alpha=args.alpha, lambda3=l3, lambda2=l2, lambda1=l1,
                           unknown_policy=policy)


def build_parser():
    parser = argparse.ArgumentParser(prog="statpos",
                                     description="statistical POS tagging toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("train", help="build a counts model from a tagged corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True, help="output model path")
    p.add_argument("--tagset", help="tagset file (default: built-in Marathi tagset)")
    p.add_argument("--lenient", action="store_true",
                   help="skip malformed lines instead of aborting")

    p = sub.add_parser("tag", help="tag raw text, one sentence per line")
    p.add_argument("--model", required=True)
    p.add_argument("--method", required=True, choices=taggers.METHODS)
    p.add_argument("--input", help="raw text path (default: stdin)")
    p.add_argument("--output", help="tagged output path (default: stdout)")
    _smoothing_args(p)

    p = sub.add_parser("eval", help="re-tag a gold corpus and score the result")
    p.add_argument("--model")
    p.add_argument("--method", choices=taggers.METHODS)
    p.add_argument("--gold")
    p.add_argument("--style", choices=("plain", "tsv"), default="plain")
    p.add_argument("--counts", nargs=2, type=int, metavar=("CORRECT", "TOTAL"),
                   help="skip tagging; print the accuracy of these bare counts")
    _smoothing_args(p)

    p = sub.add_parser("probe", help="inspect model probabilities and decode traces")
    p.add_argument("--model", required=True)
    p.add_argument("query", nargs="+",
                   help="emit WORD TAG | trans PREV TAG | tri T2 T1 TAG | "
                        "lex WORD | decode METHOD WORD...")
    _smoothing_args(p)

    return parser


def cmd_train(args):
    tagset = Tagset.from_file(args.tagset) if args.tagset else default_tagset()
    try:
        sentences, skipped = corpus_io.load_corpus(args.corpus, tagset,
                                                   strict=not args.lenient)
    except StatposError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if not sentences:
        print("error: empty corpus", file=sys.stderr)
        return 2
    model = counts_mod.build_counts(sentences, tagset)
    try:
        counts_mod.save_model(model, args.model)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(f"sentences: {len(sentences)}")
    print(f"tokens: {model.total_tokens}")
    print(f"vocabulary: {len(model.vocabulary)}")
    print(f"tags: {len(model.tagset)}")
    print(f"skipped: {skipped}")
    return 0


def cmd_tag(args):
    try:
        model = counts_mod.load_model(args.model)
    except StatposError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    config = taggers.TaggerConfig(method=args.method, smoothing=_smoothing_from(args))
    instream = open(args.input, encoding="utf-8") if args.input else sys.stdin
    outstream = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for raw in instream:
            line = raw.rstrip("\r\n")
            if not line.strip():
                outstream.write("\n")
                continue
            try:
                words = corpus_io.tokenize_raw_line(line)
            except EmptyLine as e:
                print(f"warning: {e}", file=sys.stderr)
                outstream.write("\n")
                continue
            tagged = taggers.tag_sentence(words, model, config)
            outstream.write(corpus_io.serialize_tagged_sentence(tagged) + "\n")
    finally:
        if args.input:
            instream.close()
        if args.output:
            outstream.close()
    return 0


def cmd_eval(args):
    if args.counts:
        correct, total = args.counts
        print(f"accuracy: {evaluation.round_percent(evaluation.accuracy_percent(correct, total))}")
        return 0
    if not (args.model and args.method and args.gold):
        print("error: --model, --method and --gold are required without --counts",
              file=sys.stderr)
        return 1
    try:
        model = counts_mod.load_model(args.model)
        gold, _ = corpus_io.load_corpus(args.gold, model.tagset, strict=True)
    except StatposError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    config = taggers.TaggerConfig(method=args.method, smoothing=_smoothing_from(args))
    predicted = [taggers.tag_sentence([w for w, _ in s], model, config) for s in gold]
    report = evaluation.evaluate(gold, predicted)
    sys.stdout.write(evaluation.format_report(report, style=args.style))
    return 0


def _fmt_prob(p):
    return f"{p:.10g}"


def cmd_probe(args):
    try:
        model = counts_mod.load_model(args.model)
    except StatposError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    smoothing = _smoothing_from(args)
    raw_smoothing = SmoothingConfig(alpha=0.0, lambda3=1.0, lambda2=0.0, lambda1=0.0,
                                    unknown_policy=smoothing.unknown_policy,
                                    open_class_tags=smoothing.open_class_tags)
    q = args.query
    try:
        if q[0] == "emit" and len(q) == 3:
            _, word, tag = q
            raw = counts_mod.p_word_given_tag(model, word, tag, raw_smoothing)
            smooth = counts_mod.p_word_given_tag(model, word, tag, smoothing)
            print(f"raw\t{_fmt_prob(raw)}")
            print(f"smoothed\t{_fmt_prob(smooth)}")
        elif q[0] == "trans" and len(q) == 3:
            _, prev, tag = q
            raw = counts_mod.p_bigram_transition(model, prev, tag, raw_smoothing)
            smooth = counts_mod.p_bigram_transition(model, prev, tag, smoothing)
            print(f"raw\t{_fmt_prob(raw)}")
            print(f"smoothed\t{_fmt_prob(smooth)}")
        elif q[0] == "tri" and len(q) == 4:
            _, t2, t1, tag = q
            raw = counts_mod.p_trigram_transition(model, t2, t1, tag, raw_smoothing)
            smooth = counts_mod.p_trigram_transition(model, t2, t1, tag, smoothing)
            print(f"raw\t{_fmt_prob(raw)}")
            print(f"smoothed\t{_fmt_prob(smooth)}")
        elif q[0] == "lex" and len(q) == 2:
            word = q[1]
            entries = model.tags_for_word.get(word)
            if entries is None:
                print(f"error: unknown word {word!r}", file=sys.stderr)
                return 1
            dist = [(counts_mod.p_tag_given_word(model, word, t), t) for t in entries]
            dist.sort(key=lambda pt: (-pt[0], pt[1]))
            print(" / ".join(f"{t} {_fmt_prob(p)}" for p, t in dist))
        elif q[0] == "decode" and len(q) >= 3:
            method = q[1]
            if method not in taggers.METHODS:
                print(f"error: unknown method {method!r}", file=sys.stderr)
                return 1
            words = q[2:]
            config = taggers.TaggerConfig(method=method, smoothing=smoothing)
            tagged, trace = taggers.decode_with_trace(words, model, config)
            print(corpus_io.serialize_tagged_sentence(tagged))
            print(f"path_score\t{trace.path_score:.6f}")
            for i, scores in enumerate(trace.positions):
                row = "\t".join(f"{t}={s:.4f}" for t, s in sorted(scores.items()))
                print(f"{i}\t{words[i]}\t{row}")
        else:
            print(f"error: unknown query form {' '.join(q)!r}", file=sys.stderr)
            return 1
    except StatposError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        handler = {
            "train": cmd_train,
            "tag": cmd_tag,
            "eval": cmd_eval,
            "probe": cmd_probe,
        }[args.subcommand]
        return handler(args)
    except StatposError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
