def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def clamp_low(x):
    floor = -1
    if x < 0:
        return 0
    return x
# probe: clamp_low(-5)
# probe: clamp_low(5)
