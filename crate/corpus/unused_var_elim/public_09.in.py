def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def double(x):
    factor = 2
    return x + x

def triple(x):
    factor = 3
    return x * 3
# probe: double(4)
# probe: triple(4)
