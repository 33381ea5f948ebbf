import pytest

from ramseykit import targets, verify
from ramseykit.enumeration import enumerate_good, extend_level
from ramseykit.graphs import Graph


def test_lemma_hex_passes():
    report = verify.verify_lemma_hex()
    assert report.passed
    text = str(report)
    assert "classes examined: 5" in text
    assert "result: PASS" in text


def test_lemma_hex_report_is_deterministic():
    assert str(verify.verify_lemma_hex()) == str(verify.verify_lemma_hex())


def test_j7_arrow_passes_over_full_space():
    report = verify.verify_j7_arrow()
    assert report.passed
    text = str(report)
    assert "colorings examined: 1048576" in text
    assert "R(K3e,J4) = 7" in text


def test_figures_pass():
    assert verify.verify_figure("figure3").passed
    assert verify.verify_figure("figure4").passed
    with pytest.raises(ValueError):
        verify.verify_figure("figure9")


def test_schlafli_report_passes():
    report = verify.verify_schlafli()
    assert report.passed
    text = str(report)
    assert "strongly regular (27,10,1,5): ok" in text
    assert "complement is unsplittable for (K3, J4): ok" in text


def test_split_pipeline_from_archive(tmp_path):
    enumerate_good(
        targets.clique(3), targets.clique_minus_edge(7), 5, emit_dir=str(tmp_path)
    )
    report = verify.verify_split_pipeline(5, archive_dir=str(tmp_path))
    assert report.passed
    assert "graphs loaded: 14" in str(report)
    assert "splittable under (K3, J4): 14" in str(report)


def test_split_pipeline_missing_archive_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        verify.verify_split_pipeline(9, archive_dir=str(tmp_path))


def test_split_pipeline_needs_source():
    with pytest.raises(ValueError):
        verify.verify_split_pipeline(5)


def test_reports_embed_version():
    from ramseykit import __version__

    assert f"ramseykit {__version__}" in str(verify.verify_figure("figure3"))
