def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def clamp_low(x):
    if x < 0:
        return 0
    return x
