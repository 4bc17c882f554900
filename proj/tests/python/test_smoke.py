import json

import pytest

import suffixient


def test_stream_outputs():
    assert suffixient.stream("aabaababa$", direction="ltr", emit="sss") == "5 8 10\n"
    assert suffixient.stream("aabaababa$", direction="rtl", emit="chi") == "3\n"
    assert suffixient.stream(b"aabaabaab$", emit="sss") == "2 3 7 10\n"


def test_trace_is_jsonl():
    lines = suffixient.stream("aab").splitlines()
    records = [json.loads(line) for line in lines]
    assert [r["step"] for r in records] == [0, 1, 2]
    assert records[-1]["chi"] == 2


def test_maintainers():
    ltr = suffixient.LtrMaintainer()
    ltr.feed_all("aabaabaab$")
    assert ltr.chi == 4
    assert ltr.sss() == [2, 3, 7, 10]

    rtl = suffixient.RtlMaintainer(engine="naive-walk")
    for c in reversed(b"aabaabaab$"):
        delta = rtl.feed(c)
    assert delta["chi"] == 4
    assert rtl.sss() == [7, 8, 9, 10]
    assert sorted(rtl.sre_pairs()) == sorted(ltr.sre_pairs())


def test_oracle():
    assert suffixient.oracle.chi("aabaababa$") == 3
    assert len(suffixient.oracle.all_sss("aabaabaab$")) == 9
    assert suffixient.oracle.is_suffixient("aabaababa$", [5, 8, 10])
    assert suffixient.oracle.canonical_sss("aabaabaab$", "rightmost") == [7, 8, 9, 10]
    assert suffixient.oracle.supermaximal_extensions("ab") == [([], ord("a")), ([], ord("b"))]


def test_generators_and_check():
    assert suffixient.gen.fibonacci(13) == "abaababaabaab"
    assert len(suffixient.gen.de_bruijn(2, 3)) == 10
    assert suffixient.check(50, max_n=32, seed=3) is None


def test_errors():
    with pytest.raises(suffixient.InputError):
        suffixient.stream("abab", direction="rtl", sentinel=None)
    with pytest.raises(suffixient.UsageError):
        suffixient.stream("ab", emit="nope")
    with pytest.raises(suffixient.Error):
        suffixient.oracle.is_suffixient("ab", [3])
    rtl = suffixient.RtlMaintainer()
    rtl.feed(0)
    with pytest.raises(suffixient.InputError):
        rtl.feed(0)
