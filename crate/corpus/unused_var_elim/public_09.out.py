def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def double(x):
    return x + x
def triple(x):
    return x * 3
