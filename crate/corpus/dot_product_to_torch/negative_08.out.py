def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def add3(a, b):
    c = [0] * 3
    for i in range(3):
        c[i] = a[i] + b[i]
    return c
