def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def present(values):
    kept = [v for v in values if v is not None]
    return kept
