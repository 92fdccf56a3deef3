import json


class TestRenderer:
    def test_document_is_sorted_json(self):
        from renderer import render
        document, _ = render("divrem", {"height_z": 0, "height_x": 1})
        assert document.endswith("\n")
        assert json.loads(document) == {"verb": "divrem", "result": {"height_x": 1, "height_z": 0}}
        assert document.index('"height_x"') < document.index('"height_z"')

    def test_polygon_summary(self):
        from renderer import render
        result = {"polygon": {"slopes": ["1/5"], "precision_limited": False}, "interval": "(0, 1]"}
        _, summary = render("polygon", result)
        assert summary == "polygon: slopes [1/5] on (0, 1]"

    def test_precision_limited_is_marked(self):
        from renderer import render
        result = {"rank": 2, "degree": 1, "polygon": {"slopes": ["0", "1"], "precision_limited": True}}
        _, summary = render("hn-generic", result)
        assert "(precision limited)" in summary

    def test_report_summary(self):
        """special が無いときは - を出す"""
        from renderer import render
        result = {"report": {"comparison": "not_computed", "special": None,
                             "generic": {"slopes": ["1"], "precision_limited": False}}}
        _, summary = render("compare", result)
        assert summary == "compare: not_computed generic [1] special -"

    def test_certificate_summary(self):
        from renderer import render
        result = {"target": 12, "certificate": {"iterations_used": 3, "flags": []}}
        _, summary = render("triangularize", result)
        assert summary == "triangularize: 3 passes, target 12, flags none"

    def test_selftest_summary(self):
        from renderer import render
        result = {"seed": 42, "suites": [{"instances": 1, "failed": 0}, {"instances": 4, "failed": 1}]}
        _, summary = render("selftest", result)
        assert summary == "selftest: 1/2 suites passed (5 instances, seed 42)"
