import pytest

from statpos import Tagset, build_counts, parse_tagged_line


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.fspath.basename == "test_acceptance.py":
        print(f"\nACCEPTANCE {item.name}: {'PASS' if rep.passed else 'FAIL'}")


SMALL_TAGS = ["JJ", "NN", "QC", "RB", "VM"]


@pytest.fixture
def small_tagset():
    return Tagset(SMALL_TAGS)


def corpus_from(lines, tagset):
    return [parse_tagged_line(line, tagset) for line in lines]


def model_from(lines, tagset):
    return build_counts(corpus_from(lines, tagset), tagset)
