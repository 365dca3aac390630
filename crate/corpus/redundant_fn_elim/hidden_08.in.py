def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def remember(pair):
    ...

def swap(a, b):
    remember((a, b))
    return b, a
# probe: swap(1, 2)
