def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def present(values):
    kept = []
    for v in values:
        if v is not None:
            kept.append(v)
    return kept
# probe: present([1, None, 2, None])
