class TestSender:
    def test_stdout(self, capsys):
        from sender import send
        send("{\"verb\": \"selftest\"}\n")
        assert capsys.readouterr().out == "{\"verb\": \"selftest\"}\n"

    def test_file_in_new_directory(self, tmp_path, capsys):
        """出力先ディレクトリがなければ作る"""
        from sender import send
        path = tmp_path / "nested" / "dir" / "report.json"
        send("{}\n", str(path))
        assert path.read_text(encoding="utf-8") == "{}\n"
        assert capsys.readouterr().out == ""
