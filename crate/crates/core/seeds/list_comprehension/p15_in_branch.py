def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def prepare(values, double):
    if double:
        out = []
        for v in values:
            out.append(v * 2)
        return out
    return values
# probe: prepare([1, 2], True)
# probe: prepare([1, 2], False)
