def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def squares(n):
    out = []
    for k in range(n):
        out.append(k * k)
    return out
# probe: squares(5)
