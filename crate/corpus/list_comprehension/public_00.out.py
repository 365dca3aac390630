def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def squares(n):
    out = [k * k for k in range(n)]
    return out
