package zoo.core;

/** Anything staff can put food in front of. */
public interface Feedable {
    void feed(int grams);

    boolean isHungry();
}
