def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.REPORTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORTS:
            terminalreporter.write_line(line)
