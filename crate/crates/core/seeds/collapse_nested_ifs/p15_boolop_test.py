def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def window(x, lo, hi, enabled):
    if enabled and lo < hi:
        if lo <= x and x <= hi:
            return x - lo
    return -1
# probe: window(5, 0, 10, True)
# probe: window(5, 0, 10, False)
# probe: window(50, 0, 10, True)
