def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def fact(n):
    result = 1
    for k in range(2, n + 1):
        result *= k
    return result
