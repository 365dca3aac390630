def on_start():
    pass

def on_stop():
    ...

on_start()
values = [3, 1, 2]
values.sort()
on_stop()
print(values)
