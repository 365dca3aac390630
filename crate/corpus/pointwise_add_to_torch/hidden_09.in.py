def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def add_pairs(pairs):
    outs = []
    for a, b in pairs:
        c = []
        for i in range(len(a)):
            c.append(a[i] + b[i])
        outs.append(c)
    return outs
