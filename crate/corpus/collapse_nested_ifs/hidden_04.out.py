def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def window(x, lo, hi, enabled):
    if enabled and lo < hi and lo <= x and x <= hi:
        return x - lo
    return -1
