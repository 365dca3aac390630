def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def prepare(values, double):
    if double:
        out = [v * 2 for v in values]
        return out
    return values
