def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
width = 12
height = width
cells = width * height
print(cells / 2)
